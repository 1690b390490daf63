#pragma once

#include <complex>

namespace peo {

using cplx = std::complex<double>;

// Gamma-function backbone. Lanczos approximation (g = 7, nine coefficients)
// with the reflection formula for Re z < 1/2. Positive integers up to 171
// come from an exact factorial table.
//
// Accuracy target: >= 12 significant digits for real arguments in
// [-170, 170] away from the poles.

/// Gamma(z). Throws PoleError for z in {0, -1, -2, ...}.
cplx gamma(cplx z);
double gamma(double x);

/// 1/Gamma(z); entire, exactly zero at the non-positive integers.
cplx recip_gamma(cplx z);
double recip_gamma(double x);

/// log|Gamma(x)| for real x off the poles, and the sign of Gamma(x).
double lgamma_abs(double x, int* sign = nullptr);

/// Euler Beta function, x, y > 0.
double beta(double x, double y);

/// n! as a double (exact for n <= 22, correctly rounded table up to 170).
double factorial(int n);

/// True iff z is (numerically exactly) a non-positive integer.
bool is_gamma_pole(cplx z);

}  // namespace peo
