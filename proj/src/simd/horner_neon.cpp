#include "peo/simd/horner.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

#include <cmath>
#include <cstddef>

namespace peo::simd {

void horner_neon(std::span<const double> coeffs, std::span<const double> y, std::span<double> out) {
  const std::size_t n = y.size();
  const std::size_t deg = coeffs.size();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t yv = vld1q_f64(y.data() + i);
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t k = deg; k-- > 0;) acc = vfmaq_f64(vdupq_n_f64(coeffs[k]), acc, yv);
    vst1q_f64(out.data() + i, acc);
  }
  for (; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t k = deg; k-- > 0;) acc = std::fma(acc, y[i], coeffs[k]);
    out[i] = acc;
  }
}

void horner2_neon(std::span<const double> ca, std::span<const double> cb,
                  std::span<const double> y, std::span<double> outa, std::span<double> outb) {
  horner_neon(ca, y, outa);
  horner_neon(cb, y, outb);
}

}  // namespace peo::simd
#endif
