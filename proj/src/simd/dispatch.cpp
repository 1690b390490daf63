#include <atomic>
#include <stdexcept>

#include "peo/simd/horner.hpp"

namespace peo::simd {
namespace {

std::atomic<Backend>& current() {
  static std::atomic<Backend> b{detect_backend()};
  return b;
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "unknown";
}

bool backend_supported(Backend b) {
  switch (b) {
    case Backend::Scalar: return true;
    case Backend::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Backend::Neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Backend detect_backend() {
  if (backend_supported(Backend::Avx2)) return Backend::Avx2;
  if (backend_supported(Backend::Neon)) return Backend::Neon;
  return Backend::Scalar;
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (!backend_supported(b))
    throw std::invalid_argument("SIMD backend not supported on this CPU: " +
                                std::string(backend_name(b)));
  current().store(b, std::memory_order_relaxed);
}

void horner(std::span<const double> coeffs, std::span<const double> y, std::span<double> out) {
  if (out.size() != y.size()) throw std::invalid_argument("horner: size mismatch");
  switch (active_backend()) {
#if defined(__x86_64__) || defined(_M_X64)
    case Backend::Avx2: return horner_avx2(coeffs, y, out);
#endif
#if defined(__aarch64__)
    case Backend::Neon: return horner_neon(coeffs, y, out);
#endif
    default: return horner_scalar(coeffs, y, out);
  }
}

void horner2(std::span<const double> ca, std::span<const double> cb, std::span<const double> y,
             std::span<double> outa, std::span<double> outb) {
  if (outa.size() != y.size() || outb.size() != y.size())
    throw std::invalid_argument("horner2: size mismatch");
  switch (active_backend()) {
#if defined(__x86_64__) || defined(_M_X64)
    case Backend::Avx2: return horner2_avx2(ca, cb, y, outa, outb);
#endif
#if defined(__aarch64__)
    case Backend::Neon: return horner2_neon(ca, cb, y, outa, outb);
#endif
    default: return horner2_scalar(ca, cb, y, outa, outb);
  }
}

}  // namespace peo::simd
