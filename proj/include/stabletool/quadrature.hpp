#pragma once

#include <functional>
#include <vector>

namespace stabletool::quad {

/// Tuning knobs for the singular-integral machinery.
struct QuadratureConfig {
  double inner_cut = 1e-3;       // Taylor-subtraction radius, scaled by max(1,|x|)
  double outer_cut = 1e3;        // switch to analytic/series tail, scaled by max(1,|x|)
  int panels = 2048;             // budget for adaptive subdivision
  double graded_exponent = 2.0;  // mesh grading toward singular points
  double abs_tol = 1e-8;
  double rel_tol = 1e-6;

  void check() const;
};

using Fn = std::function<double(double)>;

/// Fixed-order Gauss-Legendre on [a, b].
double gauss(const Fn& f, double a, double b, int order = 16);

/// Adaptive Gauss on [a, b]: bisects until the GL16/GL32 difference on each
/// subinterval meets the tolerance. max_depth guards runaway recursion.
double adaptive(const Fn& f, double a, double b, double abs_tol, double rel_tol,
                int max_depth = 28);

/// Adaptive integration over [pts[0], pts.back()] with forced breakpoints.
double adaptive_panels(const Fn& f, const std::vector<double>& pts, double abs_tol,
                       double rel_tol);

/// Geometric breakpoints from b down toward a (a > 0), factor 2 per panel,
/// ending when panel width < a_min. Returned ascending, includes a_min-side start.
std::vector<double> geometric_toward(double singular_end, double far_end, double first_width);

/// Integrate f over (lo, hi) where f has an integrable algebraic singularity
/// at lo: geometric panels toward lo with Gauss on each.
double graded_toward_left(const Fn& f, double lo, double hi, double rel_first, int order = 16);

}  // namespace stabletool::quad
