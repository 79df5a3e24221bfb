#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "stabletool/kernel.hpp"
#include "stabletool/quadrature.hpp"

namespace stabletool {

/// A scalar function with enough structure for singular quadrature:
/// optional derivatives (finite differences fill in when absent), support
/// bounds (value == 0 outside), growth control, and the points where it is
/// not C^2. An exact power tail can be declared for profiles like (t)_+^beta.
struct SmoothFunction1D {
  std::function<double(double)> value;
  std::function<double(double)> derivative;         // optional
  std::function<double(double)> second_derivative;  // optional
  double support_left = -std::numeric_limits<double>::infinity();
  double support_right = std::numeric_limits<double>::infinity();
  double growth_exponent = 0.0;  // |u(t)| <= C (1 + |t|^p)
  std::vector<double> kinks;
  // value(t) = tail_coeff * t^{tail_exponent} for t >= tail_start
  bool has_power_tail_right = false;
  double tail_start = 0, tail_coeff = 0, tail_exponent = 0;

  double operator()(double t) const;
  double d1(double t) const;
  double d2(double t) const;
};

namespace profiles {

/// (t)_+^beta with exact tail.
SmoothFunction1D power_plus(double beta);

/// C-infinity bump exp(1 - 1/(1-(t/R)^2)) on (-R, R).
SmoothFunction1D bump(double radius);

/// Gaussian exp(-((t-c)/w)^2) truncated where it underflows tolerances.
SmoothFunction1D gaussian(double center, double width);

/// (t)_+^gamma * cutoff(t); kink at 0, support inherited from the cutoff.
SmoothFunction1D power_times_cutoff(double gamma, const SmoothFunction1D& cutoff);

/// a0 + a1 t + ... restricted to [lo, hi] (no extension outside).
SmoothFunction1D polynomial(const std::vector<double>& coeffs);

}  // namespace profiles

/// Pointwise (Lu)(x) for a valid 1D kernel, by symmetrized singular
/// quadrature with Taylor-subtracted near field and analytic tails.
double apply_operator_1d(const StableKernel& K, const SmoothFunction1D& u, double x,
                         const quad::QuadratureConfig& cfg = {});

/// (L* u)(x) = apply_operator_1d with the adjoint kernel.
double apply_adjoint_1d(const StableKernel& K, const SmoothFunction1D& u, double x,
                        const quad::QuadratureConfig& cfg = {});

/// L[(.)_+^beta](x) for x > 0, beta in (0, 2s); power tail handled exactly.
double apply_to_power(const StableKernel& K, double beta, double x,
                      const quad::QuadratureConfig& cfg = {});

/// |int L eta . tau - int eta . L* tau| over a shared grid.
double adjoint_pairing_check(const StableKernel& K, const SmoothFunction1D& eta,
                             const SmoothFunction1D& tau,
                             const quad::QuadratureConfig& cfg = {});

}  // namespace stabletool
