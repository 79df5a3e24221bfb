#pragma once

#include <vector>

#include "stabletool/evaluator.hpp"
#include "stabletool/kernel.hpp"

namespace stabletool {

struct IbpReport {
  double lhs = 0;   // int_0^inf (u' L*v + Lu v') dx
  double rhs = 0;   // c(L, +1) eta(0) tau(0)
  double rel_err = 0;
  double gamma = 0, gamma_star = 0;
  double boundary_mass = 0;  // analytically added (0, x_min) contribution
  int panels = 0;
};

/// Verify the flat integration-by-parts identity on the half-line with
/// u = (x)_+^gamma eta, v = (x)_+^{gamma*} tau. eta, tau smooth, compactly
/// supported cutoffs.
IbpReport verify_flat_ibp(const StableKernel& K, const SmoothFunction1D& eta,
                          const SmoothFunction1D& tau,
                          const quad::QuadratureConfig& cfg = {});

/// E_lambda = int_0^inf (u(.+lambda) L*v + Lu v(.+lambda)) dx for each shift.
std::vector<std::pair<double, double>> shifted_energy_probe(
    const StableKernel& K, const SmoothFunction1D& eta, const SmoothFunction1D& tau,
    const std::vector<double>& lambda_shifts, const quad::QuadratureConfig& cfg = {});

/// Slope of E_lambda at 0+ fitted with the boundary-layer basis
/// {lambda, lambda^{1+gamma}, lambda^{1+gamma*}}; matches the lhs of
/// verify_flat_ibp.
double shifted_energy_slope(const StableKernel& K, const SmoothFunction1D& eta,
                            const SmoothFunction1D& tau, const std::vector<double>& lambda_shifts,
                            const quad::QuadratureConfig& cfg = {});

}  // namespace stabletool
