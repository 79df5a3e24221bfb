#include "stabletool/specfun.hpp"

#include <cmath>
#include <string>

#include "stabletool/errors.hpp"

namespace stabletool::specfun {

namespace {

// Lanczos g = 607/128, n = 15 (Boost's choice; sub-1e-15 relative error
// for the positive half-axis).
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczosCoef[15] = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5};

double lanczos_sum(double x) {
  // x >= 0.5 assumed; series in 1/(x+k)
  double s = kLanczosCoef[0];
  for (int k = 1; k < 15; ++k) s += kLanczosCoef[k] / (x + k - 1);
  return s;
}

// Gamma on [0.5, inf) via Lanczos.
double gamma_positive(double x) {
  const double base = x + kLanczosG - 0.5;
  return std::sqrt(2 * kPi) * std::pow(base, x - 0.5) * std::exp(-base) * lanczos_sum(x);
}

bool near_nonpositive_integer(double x, double tol) {
  if (x > 0.5) return false;
  return std::abs(x - std::round(x)) < tol;
}

}  // namespace

double sinpi(double x) {
  // reduce to |r| <= 0.5 so sin(pi r) is exact at integer x
  double r = std::fmod(x, 2.0);
  if (r > 1.0)
    r -= 2.0;
  else if (r < -1.0)
    r += 2.0;
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(kPi * r);
}

double cospi(double x) { return sinpi(x + 0.5); }

double gamma_fn(double x) {
  if (near_nonpositive_integer(x, 1e-8))
    throw PoleError("gamma_fn: pole at non-positive integer, x = " + std::to_string(x));
  if (x >= 0.5) return gamma_positive(x);
  // reflection: Gamma(x) = pi / (sin(pi x) Gamma(1-x))
  return kPi / (sinpi(x) * gamma_positive(1.0 - x));
}

double log_abs_gamma(double x) {
  if (near_nonpositive_integer(x, 1e-8))
    throw PoleError("log_abs_gamma: pole at non-positive integer, x = " + std::to_string(x));
  if (x >= 0.5) {
    const double base = x + kLanczosG - 0.5;
    return 0.5 * std::log(2 * kPi) + (x - 0.5) * std::log(base) - base + std::log(lanczos_sum(x));
  }
  return std::log(kPi) - std::log(std::abs(sinpi(x))) - log_abs_gamma(1.0 - x);
}

double rgamma(double x) {
  if (x >= 0.5) return 1.0 / gamma_positive(x);
  // 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi, entire in x
  return sinpi(x) * gamma_positive(1.0 - x) / kPi;
}

double reflection_product(double x) {
  if (std::abs(x - std::round(x)) < 1e-8)
    throw PoleError("reflection_product: integer argument, x = " + std::to_string(x));
  return kPi / sinpi(x);
}

}  // namespace stabletool::specfun
