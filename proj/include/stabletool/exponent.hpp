#pragma once

#include "stabletool/kernel.hpp"
#include "stabletool/symbol.hpp"

namespace stabletool {

/// Boundary exponent gamma(L,nu) = s + (1/pi) arctan(B(nu)/A(nu)), always in
/// (0,2s) n (2s-1,1).
double gamma_exponent(const StableKernel& K, const Vec& nu);

/// gamma* = 2s - gamma = gamma(L*, nu).
double gamma_star(const StableKernel& K, const Vec& nu);

/// kappa_{beta,L} for the 1D kernel (a + b sign y)/|y|^{1+2s}, s != 1/2:
/// L[(x_+)^beta] = kappa (x_+)^{beta-2s}. Gamma-ratio form, analytic on
/// beta in (0, 2s).
double kappa_1d(double a, double b_odd, double s, double beta);

/// s = 1/2 version for L = a(-Lap)^{1/2} + b d/dx (a = symbol coefficient):
/// kappa = beta (a cot(pi beta) + b), root at 1/2 + arctan(b/a)/pi.
double kappa_1d_half(double a, double b, double beta);

/// kappa for a validated 1D kernel object (atoms + drift), any s.
double kappa_for_kernel(const StableKernel& K, double beta);

/// Closed-form exponent and the kappa-bisection root; the two agree to 1e-8.
struct GammaRoots {
  double gamma_closed;
  double gamma_bisect;
};
GammaRoots gamma_1d_root(double a, double b_odd, double s);

/// c(L,nu) = Gamma(gamma+1) Gamma(gamma*+1) sqrt(A^2+B^2) > 0.
double ibp_constant(const StableKernel& K, const Vec& nu);

/// Half-space profile coefficients of sqrt(L)[(x.nu)_+^gamma]:
///   sqrt(L) u = (A1 (x_n)_+^{g-s} + A2 (x_n)_-^{g-s}) eta(x',0) + h.
/// Starred values by the substitution (B_sharp -> -B_sharp, gamma -> 2s-gamma).
struct ProfileCoeffs {
  double A1, A2, A1_star, A2_star;
  double c1, c2;
  double c_combined;  // equals ibp_constant when gamma = gamma(L,nu)
};
ProfileCoeffs halfspace_profile_coeffs(const StableKernel& K, const Vec& nu, double gamma);

/// Everything about one kernel/normal pair.
struct ExponentReport {
  double gamma;
  double gamma_star;
  Vec normal;
  SymbolValue symbol_at_normal;
  double ibp_constant;
  double order;
  int dimension;
};
ExponentReport exponent_report(const StableKernel& K, const Vec& nu);

}  // namespace stabletool
