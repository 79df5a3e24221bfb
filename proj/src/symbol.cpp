#include "stabletool/symbol.hpp"

#include <cmath>

#include "stabletool/errors.hpp"
#include "stabletool/specfun.hpp"

namespace stabletool {

using specfun::kPi;

namespace {

// Radial constants: cA = int_0^inf (1-cos t) t^{-1-2s} dt, and the signed
// sine companion; cA(1/2) = pi/2.
double const_A(double s) {
  if (s == 0.5) return kPi / 2;
  return -specfun::gamma_fn(-2 * s) * specfun::cospi(s);
}

double const_B(double s) { return specfun::gamma_fn(-2 * s) * specfun::sinpi(s); }

}  // namespace

SymbolValue symbol(const StableKernel& K, const Vec& xi) {
  if (int(xi.size()) != K.dimension())
    throw InvalidParameterError("symbol: frequency dimension mismatch");
  if (!(norm(xi) > 0)) throw ZeroFrequencyError("symbol: xi = 0");
  const double s = K.order();
  SymbolValue out;
  out.frequency = xi;

  double me = 0;  // sum |theta.xi|^{2s} w   (even integrand: K_e == K here)
  double mo = 0;  // sum |theta.xi|^{2s-1}(theta.xi) w  (odd integrand)
  double mlog = 0;
  for (const auto& a : K.atoms()) {
    const double t = dot(a.direction, xi);
    const double at = std::abs(t);
    if (at > 0) {
      me += a.weight * std::pow(at, 2 * s);
      if (s != 0.5) mo += a.weight * std::pow(at, 2 * s - 1) * t;
      else mlog += a.weight * t * std::log(at);  // 0 log 0 := 0 via the at>0 gate
    }
  }

  if (s == 0.5) {
    out.a_part = (kPi / 2) * me;
    out.b_part = mlog + dot(K.drift(), xi);
  } else {
    out.a_part = const_A(s) * me;
    out.b_part = const_B(s) * mo;
  }
  return out;
}

SymbolValue adjoint_symbol(const StableKernel& K, const Vec& xi) {
  SymbolValue sv = symbol(K, xi);
  sv.b_part = -sv.b_part;
  return sv;
}

SymbolValue sqrt_symbol_value(const SymbolValue& sv) {
  const double A = sv.a_part, B = sv.b_part;
  const double R = std::hypot(A, B);
  SymbolValue out;
  out.frequency = sv.frequency;
  out.a_part = std::sqrt(0.5 * (A + R));
  out.b_part = B / (std::sqrt(2.0) * std::sqrt(A + R));
  return out;
}

SymbolValue sqrt_symbol(const StableKernel& K, const Vec& xi) {
  return sqrt_symbol_value(symbol(K, xi));
}

}  // namespace stabletool
