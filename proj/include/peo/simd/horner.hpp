#pragma once

#include <span>
#include <string_view>

namespace peo::simd {

// Polynomial evaluation p(y) = sum_k c[k] y^k over many points. Two
// polynomials in the same variable are evaluated in one pass because the
// Laguerre cosine/sine pair shares y = x^2.

enum class Backend { Scalar, Avx2, Neon };

std::string_view backend_name(Backend b);

/// Best backend this CPU supports.
Backend detect_backend();
/// Backend currently used by the dispatching entry points.
Backend active_backend();
/// Override the dispatch (tests). Throws std::invalid_argument when the
/// backend is not supported here.
void set_backend(Backend b);
bool backend_supported(Backend b);

void horner_scalar(std::span<const double> coeffs, std::span<const double> y, std::span<double> out);
void horner2_scalar(std::span<const double> ca, std::span<const double> cb,
                    std::span<const double> y, std::span<double> outa, std::span<double> outb);

#if defined(__x86_64__) || defined(_M_X64)
void horner_avx2(std::span<const double> coeffs, std::span<const double> y, std::span<double> out);
void horner2_avx2(std::span<const double> ca, std::span<const double> cb,
                  std::span<const double> y, std::span<double> outa, std::span<double> outb);
#endif

#if defined(__aarch64__)
void horner_neon(std::span<const double> coeffs, std::span<const double> y, std::span<double> out);
void horner2_neon(std::span<const double> ca, std::span<const double> cb,
                  std::span<const double> y, std::span<double> outa, std::span<double> outb);
#endif

/// Dispatching versions.
void horner(std::span<const double> coeffs, std::span<const double> y, std::span<double> out);
void horner2(std::span<const double> ca, std::span<const double> cb, std::span<const double> y,
             std::span<double> outa, std::span<double> outb);

}  // namespace peo::simd
