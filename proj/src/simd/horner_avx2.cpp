// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include <cmath>
#include <cstddef>

#include "peo/simd/horner.hpp"

namespace peo::simd {
namespace {

inline double horner_tail(std::span<const double> c, double y) {
  double acc = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) acc = std::fma(acc, y, c[k]);
  return acc;
}

}  // namespace

void horner_avx2(std::span<const double> coeffs, std::span<const double> y, std::span<double> out) {
  const std::size_t n = y.size();
  const std::size_t deg = coeffs.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d yv = _mm256_loadu_pd(y.data() + i);
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t k = deg; k-- > 0;) acc = _mm256_fmadd_pd(acc, yv, _mm256_set1_pd(coeffs[k]));
    _mm256_storeu_pd(out.data() + i, acc);
  }
  for (; i < n; ++i) out[i] = horner_tail(coeffs, y[i]);
}

void horner2_avx2(std::span<const double> ca, std::span<const double> cb,
                  std::span<const double> y, std::span<double> outa, std::span<double> outb) {
  const std::size_t n = y.size();
  const std::size_t da = ca.size();
  const std::size_t db = cb.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d yv = _mm256_loadu_pd(y.data() + i);
    __m256d a = _mm256_setzero_pd();
    __m256d b = _mm256_setzero_pd();
    std::size_t k = da > db ? da : db;
    while (k-- > 0) {
      if (k < da) a = _mm256_fmadd_pd(a, yv, _mm256_set1_pd(ca[k]));
      if (k < db) b = _mm256_fmadd_pd(b, yv, _mm256_set1_pd(cb[k]));
    }
    _mm256_storeu_pd(outa.data() + i, a);
    _mm256_storeu_pd(outb.data() + i, b);
  }
  for (; i < n; ++i) {
    outa[i] = horner_tail(ca, y[i]);
    outb[i] = horner_tail(cb, y[i]);
  }
}

}  // namespace peo::simd
