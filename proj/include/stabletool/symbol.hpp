#pragma once

#include "stabletool/kernel.hpp"

namespace stabletool {

/// Fourier symbol value A(xi) + i B(xi) at one frequency.
struct SymbolValue {
  double a_part = 0;  // A(xi) >= 0, > 0 for xi != 0
  double b_part = 0;  // B(xi)
  Vec frequency;
};

/// Symbol of L at xi != 0.
///   A(xi) = -Gamma(-2s) cos(pi s) * sum |theta.xi|^{2s} K_e      (s != 1/2)
///   B(xi) =  Gamma(-2s) sin(pi s) * sum |theta.xi|^{2s-1}(theta.xi) K_o
/// The signed Gamma keeps both expressions valid on either side of s = 1/2;
/// at s = 1/2 the cosine constant degenerates to pi/2 and B picks up the
/// log branch plus the drift term, with 0 log 0 := 0.
SymbolValue symbol(const StableKernel& K, const Vec& xi);

/// Symbol of L*: (A, -B).
SymbolValue adjoint_symbol(const StableKernel& K, const Vec& xi);

/// Principal square root of the symbol, A_sharp > 0.
SymbolValue sqrt_symbol(const StableKernel& K, const Vec& xi);
SymbolValue sqrt_symbol_value(const SymbolValue& sv);

}  // namespace stabletool
