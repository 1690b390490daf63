#include "peo/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "peo/errors.hpp"

namespace peo {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kPi = std::numbers::pi;
const double kLogSqrtTwoPi = 0.5 * std::log(2.0 * kPi);

const std::array<double, 171>& factorial_table() {
  static const std::array<double, 171> table = [] {
    std::array<double, 171> t{};
    long double acc = 1.0L;
    t[0] = 1.0;
    for (int n = 1; n < 171; ++n) {
      acc *= n;
      t[n] = static_cast<double>(acc);
    }
    return t;
  }();
  return table;
}

// sin(pi x) with exact zeros at the integers.
double sinpi(double x) {
  double r = x - 2.0 * std::round(x / 2.0);  // r in [-1, 1]
  if (r == 0.0 || std::abs(r) == 1.0) return 0.0;
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(kPi * r);
}

bool is_real(cplx z) { return z.imag() == 0.0; }

bool is_positive_integer(double x) {
  return x >= 1.0 && x <= 171.0 && x == std::floor(x);
}

template <class T>
T lanczos_series(T z) {  // z already shifted by -1
  T a = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (z + static_cast<double>(i));
  return a;
}

// Gamma(x) for real x >= 1/2.
double gamma_right(double x) {
  if (is_positive_integer(x)) return factorial_table()[static_cast<int>(x) - 1];
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  const double half = std::pow(t, 0.5 * (z + 0.5));  // split to delay overflow
  return std::sqrt(2.0 * kPi) * half * (half * std::exp(-t)) * lanczos_series(z);
}

double lgamma_right(double x) {
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  return kLogSqrtTwoPi + (z + 0.5) * std::log(t) - t + std::log(lanczos_series(z));
}

cplx lgamma_right(cplx z0) {
  const cplx z = z0 - 1.0;
  const cplx t = z + kLanczosG + 0.5;
  return kLogSqrtTwoPi + (z + 0.5) * std::log(t) - t + std::log(lanczos_series(z));
}

[[noreturn]] void throw_pole(double x) {
  throw PoleError("Gamma pole at z = " + std::to_string(x));
}

}  // namespace

bool is_gamma_pole(cplx z) {
  return is_real(z) && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

double factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  if (n > 170) return HUGE_VAL;
  return factorial_table()[n];
}

double gamma(double x) {
  if (is_gamma_pole(x)) throw_pole(x);
  if (x >= 0.5) return gamma_right(x);
  return kPi / (sinpi(x) * gamma_right(1.0 - x));
}

cplx gamma(cplx z) {
  if (is_real(z)) return gamma(z.real());
  if (z.real() >= 0.5) return std::exp(lgamma_right(z));
  return kPi / (std::sin(kPi * z) * std::exp(lgamma_right(1.0 - z)));
}

double lgamma_abs(double x, int* sign) {
  if (is_gamma_pole(x)) throw_pole(x);
  if (x >= 0.5) {
    if (sign) *sign = 1;
    if (is_positive_integer(x)) return std::log(factorial_table()[static_cast<int>(x) - 1]);
    return lgamma_right(x);
  }
  const double s = sinpi(x);
  if (sign) *sign = s > 0 ? 1 : -1;
  return std::log(kPi / std::abs(s)) - lgamma_abs(1.0 - x);
}

double recip_gamma(double x) {
  if (is_gamma_pole(x)) return 0.0;
  if (x >= 0.5) {
    if (x < 171.0) return 1.0 / gamma_right(x);
    return std::exp(-lgamma_right(x));
  }
  const double one_minus = 1.0 - x;
  if (one_minus < 171.0) return sinpi(x) * gamma_right(one_minus) / kPi;
  const double s = sinpi(x);
  const double mag = std::exp(lgamma_right(one_minus) + std::log(std::abs(s)) - std::log(kPi));
  return s > 0 ? mag : -mag;
}

cplx recip_gamma(cplx z) {
  if (is_real(z)) return recip_gamma(z.real());
  if (z.real() >= 0.5) return std::exp(-lgamma_right(z));
  return std::sin(kPi * z) * std::exp(lgamma_right(1.0 - z)) / kPi;
}

double beta(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) throw DomainError("beta requires x, y > 0");
  if (x + y < 171.0) return gamma(x) * gamma(y) / gamma(x + y);
  return std::exp(lgamma_abs(x) + lgamma_abs(y) - lgamma_abs(x + y));
}

}  // namespace peo
