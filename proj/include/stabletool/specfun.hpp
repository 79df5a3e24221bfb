#pragma once

namespace stabletool::specfun {

inline constexpr double kPi = 3.14159265358979323846264338328;

/// Gamma(x) for real x not a non-positive integer.
/// Lanczos approximation, reflection for x < 0.5; relative accuracy
/// better than 1e-13 on [-20, 20] away from poles.
double gamma_fn(double x);

/// log|Gamma(x)|, same domain restrictions as gamma_fn.
double log_abs_gamma(double x);

/// 1/Gamma(x). Entire: returns 0 at non-positive integers.
double rgamma(double x);

/// Gamma(x) Gamma(1-x) = pi / sin(pi x), x not an integer.
double reflection_product(double x);

/// sin(pi x) computed with argument reduction (exact at integers).
double sinpi(double x);

/// cos(pi x) computed with argument reduction.
double cospi(double x);

}  // namespace stabletool::specfun
