#include "stabletool/halfspace.hpp"

#include <array>
#include <cmath>

#include "stabletool/errors.hpp"
#include "stabletool/exponent.hpp"
#include "stabletool/quadrature.hpp"

namespace stabletool {

namespace {

struct HalfspaceSetup {
  StableKernel Kadj;
  SmoothFunction1D u, v;
  double gamma, gamma_star, R;

  HalfspaceSetup(const StableKernel& K, const SmoothFunction1D& eta, const SmoothFunction1D& tau)
      : Kadj(K.adjoint()),
        u(),
        v(),
        gamma(gamma_exponent(K, Vec{1.0})),
        gamma_star(2 * K.order() - gamma),
        R(0) {
    if (!std::isfinite(eta.support_right) || !std::isfinite(tau.support_right))
      throw InvalidParameterError("verify_flat_ibp: cutoffs must be compactly supported");
    u = profiles::power_times_cutoff(gamma, eta);
    v = profiles::power_times_cutoff(gamma_star, tau);
    R = std::max(eta.support_right, tau.support_right);
  }
};

}  // namespace

IbpReport verify_flat_ibp(const StableKernel& K, const SmoothFunction1D& eta,
                          const SmoothFunction1D& tau, const quad::QuadratureConfig& cfg) {
  cfg.check();
  HalfspaceSetup hs(K, eta, tau);

  auto Lu = [&](double x) { return apply_operator_1d(K, hs.u, x, cfg); };
  auto Lsv = [&](double x) { return apply_operator_1d(hs.Kadj, hs.v, x, cfg); };
  auto F = [&](double x) { return hs.u.d1(x) * Lsv(x) + Lu(x) * hs.v.d1(x); };

  // geometric mesh toward the boundary resolves the x^{gamma-1} layer; the
  // mass below x_min closes analytically: int_0^xm (u' L*v + Lu v')
  //   = u(xm) L*v(xm) + v(xm) Lu(xm) + O(xm^{gamma + eps})
  const double xm = 1e-5 * hs.R;
  const double mass0 = hs.u(xm) * Lsv(xm) + hs.v(xm) * Lu(xm);

  auto bps = quad::geometric_toward(0.0, 0.35 * hs.R, xm);
  for (double t = 0.45; t < 0.9999; t += 0.1) bps.push_back(t * hs.R);
  bps.push_back(hs.R);
  double lhs = mass0;
  int panels = 0;
  for (size_t i = 0; i + 1 < bps.size(); ++i) {
    lhs += quad::gauss(F, bps[i], bps[i + 1], 16);
    ++panels;
  }

  IbpReport rep;
  rep.gamma = hs.gamma;
  rep.gamma_star = hs.gamma_star;
  rep.boundary_mass = mass0;
  rep.panels = panels;
  rep.lhs = lhs;
  rep.rhs = ibp_constant(K, Vec{1.0}) * eta(0.0) * tau(0.0);
  rep.rel_err = std::abs(rep.lhs - rep.rhs) / std::max(std::abs(rep.rhs), 1e-14);
  return rep;
}

std::vector<std::pair<double, double>> shifted_energy_probe(
    const StableKernel& K, const SmoothFunction1D& eta, const SmoothFunction1D& tau,
    const std::vector<double>& lambda_shifts, const quad::QuadratureConfig& cfg) {
  cfg.check();
  for (double l : lambda_shifts)
    if (!(l >= 0 && l <= 0.1001))
      throw InvalidParameterError("shifted_energy_probe: shifts must lie in [0, 0.1]");
  HalfspaceSetup hs(K, eta, tau);

  const double xm = 1e-6 * hs.R;
  auto bps = quad::geometric_toward(0.0, 0.35 * hs.R, xm);
  bps.insert(bps.begin(), 0.0);
  for (double t = 0.45; t < 0.9999; t += 0.1) bps.push_back(t * hs.R);
  bps.push_back(hs.R);

  std::vector<std::pair<double, double>> out;
  for (double lam : lambda_shifts) {
    auto F = [&](double x) {
      return hs.u(x + lam) * apply_operator_1d(hs.Kadj, hs.v, x, cfg) +
             apply_operator_1d(K, hs.u, x, cfg) * hs.v(x + lam);
    };
    double E = 0;
    for (size_t i = 0; i + 1 < bps.size(); ++i) E += quad::gauss(F, bps[i], bps[i + 1], 16);
    out.push_back({lam, E});
  }
  return out;
}

double shifted_energy_slope(const StableKernel& K, const SmoothFunction1D& eta,
                            const SmoothFunction1D& tau, const std::vector<double>& lambda_shifts,
                            const quad::QuadratureConfig& cfg) {
  const double g = gamma_exponent(K, Vec{1.0});
  const double gs = 2 * K.order() - g;
  std::vector<double> shifts = lambda_shifts;
  shifts.push_back(0.0);
  auto probes = shifted_energy_probe(K, eta, tau, shifts, cfg);
  const double E0 = probes.back().second;
  probes.pop_back();

  // fit (E_l - E0) = c0 l + c1 l^{1+g} + c2 l^{1+g*} + c3 l^2 by normal
  // equations; the boundary-layer exponents make plain Richardson useless
  constexpr int kTerms = 4;
  std::array<std::array<double, kTerms>, kTerms> N{};
  std::array<double, kTerms> rhs{};
  for (auto [lam, E] : probes) {
    const std::array<double, kTerms> phi{lam, std::pow(lam, 1 + g), std::pow(lam, 1 + gs),
                                         lam * lam};
    for (int i = 0; i < kTerms; ++i) {
      rhs[i] += phi[i] * (E - E0);
      for (int j = 0; j < kTerms; ++j) N[i][j] += phi[i] * phi[j];
    }
  }
  for (int c = 0; c < kTerms; ++c) {
    int p = c;
    for (int r = c + 1; r < kTerms; ++r)
      if (std::abs(N[r][c]) > std::abs(N[p][c])) p = r;
    std::swap(N[c], N[p]);
    std::swap(rhs[c], rhs[p]);
    if (std::abs(N[c][c]) < 1e-300) throw SingularMatrixError("shifted_energy_slope: fit failed");
    for (int r = c + 1; r < kTerms; ++r) {
      const double f = N[r][c] / N[c][c];
      for (int j = c; j < kTerms; ++j) N[r][j] -= f * N[c][j];
      rhs[r] -= f * rhs[c];
    }
  }
  std::array<double, kTerms> coef{};
  for (int r = kTerms - 1; r >= 0; --r) {
    double v = rhs[r];
    for (int j = r + 1; j < kTerms; ++j) v -= N[r][j] * coef[j];
    coef[r] = v / N[r][r];
  }
  return coef[0];
}

}  // namespace stabletool
