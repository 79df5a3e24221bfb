#include "stabletool/exponent.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "stabletool/errors.hpp"
#include "stabletool/specfun.hpp"

namespace stabletool {

using specfun::kPi;

namespace {

Vec unit(const Vec& nu) {
  double n = norm(nu);
  if (!(n > 0)) throw InvalidParameterError("exponent: zero normal");
  Vec u = nu;
  for (auto& c : u) c /= n;
  return u;
}

// K1/K2 of the Appendix-A computation, order 2s, via reciprocal gammas
// (1/Gamma(-beta) and 1/Gamma(1-2s+beta) vanish at their poles, so the
// expressions stay finite on all of beta in (0,2s)).
double k1_gamma_ratio(double beta, double two_s) {
  return (specfun::gamma_fn(1 - two_s) / two_s) *
         (specfun::gamma_fn(two_s - beta) * specfun::rgamma(-beta) +
          specfun::gamma_fn(1 + beta) * specfun::rgamma(1 - two_s + beta));
}

double k2_gamma_ratio(double beta, double two_s) {
  return (specfun::gamma_fn(1 - two_s) / two_s) *
         (specfun::gamma_fn(two_s - beta) * specfun::rgamma(-beta) -
          specfun::gamma_fn(1 + beta) * specfun::rgamma(1 - two_s + beta));
}

}  // namespace

double gamma_exponent(const StableKernel& K, const Vec& nu) {
  const SymbolValue sv = symbol(K, unit(nu));
  return K.order() + std::atan(sv.b_part / sv.a_part) / kPi;
}

double gamma_star(const StableKernel& K, const Vec& nu) {
  return 2 * K.order() - gamma_exponent(K, nu);
}

double kappa_1d(double a, double b_odd, double s, double beta) {
  if (!(a > 0) || !(std::abs(b_odd) < a))
    throw InvalidParameterError("kappa_1d: need a > 0, |b_odd| < a");
  if (s == 0.5) throw InvalidParameterError("kappa_1d: s = 1/2 has its own formula");
  if (!(s > 0 && s < 1)) throw InvalidParameterError("kappa_1d: s in (0,1)");
  if (!(beta > 0 && beta < 2 * s))
    throw DomainError("kappa_1d: beta outside (0, 2s)");
  return a * k1_gamma_ratio(beta, 2 * s) + b_odd * k2_gamma_ratio(beta, 2 * s);
}

double kappa_1d_half(double a, double b, double beta) {
  if (!(a > 0)) throw InvalidParameterError("kappa_1d_half: need a > 0");
  if (!(beta > 0 && beta < 1)) throw DomainError("kappa_1d_half: beta outside (0,1)");
  return beta * (a * specfun::cospi(beta) / specfun::sinpi(beta) + b);
}

double kappa_for_kernel(const StableKernel& K, double beta) {
  if (K.dimension() != 1) throw InvalidParameterError("kappa_for_kernel: 1D kernels only");
  const double wp = K.weight_plus(), wm = K.weight_minus();
  const double a = 0.5 * (wp + wm), b = 0.5 * (wp - wm);
  if (K.order() == 0.5) {
    // atoms {(+-1, w)} represent (pi w)(-Lap)^{1/2}; drift is separate
    return kappa_1d_half(kPi * a, K.drift_1d(), beta);
  }
  return kappa_1d(a, b, K.order(), beta);
}

GammaRoots gamma_1d_root(double a, double b_odd, double s) {
  if (!(a > 0)) throw InvalidParameterError("gamma_1d_root: need a > 0");
  if (s != 0.5 && !(std::abs(b_odd) < a))
    throw InvalidParameterError("gamma_1d_root: need |b_odd| < a");
  GammaRoots out{};
  double lo, hi;
  std::function<double(double)> kap;
  if (s == 0.5) {
    // (a, b_odd) are the kernel_1d parameters: atoms (a, a) represent
    // (pi a)(-Lap)^{1/2}, b_odd is the drift
    out.gamma_closed = 0.5 + std::atan(b_odd / (kPi * a)) / kPi;
    lo = 1e-6;
    hi = 1.0 - 1e-6;
    kap = [&](double b) { return kappa_1d_half(kPi * a, b_odd, b); };
  } else {
    out.gamma_closed = s - std::atan((b_odd / a) * std::tan(kPi * s)) / kPi;
    lo = std::max(0.0, 2 * s - 1) + 1e-6;
    hi = std::min(1.0, 2 * s) - 1e-6;
    kap = [&](double b) { return kappa_1d(a, b_odd, s, b); };
  }
  double flo = kap(lo), fhi = kap(hi);
  if (!(flo > 0 && fhi < 0))
    throw BisectionError("gamma_1d_root: no sign change of kappa on (" + std::to_string(lo) +
                         ", " + std::to_string(hi) + ")");
  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    double mid = 0.5 * (lo + hi);
    (kap(mid) > 0 ? lo : hi) = mid;
  }
  out.gamma_bisect = 0.5 * (lo + hi);
  return out;
}

double ibp_constant(const StableKernel& K, const Vec& nu) {
  const Vec u = unit(nu);
  const SymbolValue sv = symbol(K, u);
  const double g = gamma_exponent(K, u);
  const double gs = 2 * K.order() - g;
  return specfun::gamma_fn(g + 1) * specfun::gamma_fn(gs + 1) * std::hypot(sv.a_part, sv.b_part);
}

ProfileCoeffs halfspace_profile_coeffs(const StableKernel& K, const Vec& nu, double gamma) {
  const double s = K.order();
  if (!(gamma > 0 && gamma < 2 * s))
    throw DomainError("halfspace_profile_coeffs: gamma outside (0, 2s)");
  if (std::abs(gamma - s) < 1e-9)
    throw DomainError("halfspace_profile_coeffs: gamma too close to s (take limits instead)");
  const SymbolValue sh = sqrt_symbol(K, unit(nu));
  const double As = sh.a_part, Bs = sh.b_part;
  const double s2 = specfun::sinpi(0.5 * s);

  auto A12 = [&](double g, double B) {
    const double gm = specfun::gamma_fn(s - g) * specfun::rgamma(-g) -
                      specfun::gamma_fn(1 + g) * specfun::rgamma(1 - s + g);
    const double t = specfun::sinpi(g - 0.5 * s) / specfun::cospi(g - 0.5 * s);
    const double A1 = gm / (2 * s2) * (t * As - B);
    const double A2 = -(s * specfun::gamma_fn(1 + g) * specfun::gamma_fn(s - g)) /
                      (2 * s2 * specfun::gamma_fn(1 - s) * specfun::gamma_fn(1 + s)) *
                      (specfun::sinpi(0.5 * s) / specfun::cospi(0.5 * s) * As - B);
    return std::pair<double, double>{A1, A2};
  };

  ProfileCoeffs pc{};
  auto [A1, A2] = A12(gamma, Bs);
  auto [A1s, A2s] = A12(2 * s - gamma, -Bs);
  pc.A1 = A1;
  pc.A2 = A2;
  pc.A1_star = A1s;
  pc.A2_star = A2s;
  const double x = gamma - s;
  pc.c1 = -kPi * x * specfun::cospi(x) / specfun::sinpi(x);
  pc.c2 = specfun::gamma_fn(1 + x) * specfun::gamma_fn(1 - x);
  pc.c_combined = -(pc.c1 * (A1 * A1s + A2 * A2s) + pc.c2 * (A1 * A2s + A2 * A1s));
  return pc;
}

ExponentReport exponent_report(const StableKernel& K, const Vec& nu) {
  ExponentReport r{};
  const Vec u = unit(nu);
  r.normal = u;
  r.symbol_at_normal = symbol(K, u);
  r.gamma = gamma_exponent(K, u);
  r.gamma_star = 2 * K.order() - r.gamma;
  r.ibp_constant = ibp_constant(K, u);
  r.order = K.order();
  r.dimension = K.dimension();
  return r;
}

}  // namespace stabletool
