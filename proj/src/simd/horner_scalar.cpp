#include <cstddef>

#include "peo/simd/horner.hpp"

namespace peo::simd {

void horner_scalar(std::span<const double> coeffs, std::span<const double> y, std::span<double> out) {
  const std::size_t deg = coeffs.size();
  for (std::size_t i = 0; i < y.size(); ++i) {
    double acc = 0.0;
    for (std::size_t k = deg; k-- > 0;) acc = acc * y[i] + coeffs[k];
    out[i] = acc;
  }
}

void horner2_scalar(std::span<const double> ca, std::span<const double> cb,
                    std::span<const double> y, std::span<double> outa, std::span<double> outb) {
  horner_scalar(ca, y, outa);
  horner_scalar(cb, y, outb);
}

}  // namespace peo::simd
