#pragma once

#include <functional>
#include <string>
#include <vector>

#include "stabletool/evaluator.hpp"
#include "stabletool/kernel.hpp"
#include "stabletool/linalg.hpp"

namespace stabletool {

/// Uniform interval mesh; nodes at cell centers, strictly inside (x_L, x_R).
struct Grid1D {
  double x_left, x_right;
  int n_nodes;

  Grid1D(double xl, double xr, int n);
  double h() const { return (x_right - x_left) / n_nodes; }
  double node(int j) const { return x_left + (j + 0.5) * h(); }
  double length() const { return x_right - x_left; }
};

struct DirichletProblem {
  StableKernel kernel;
  std::function<double(double)> rhs;
  Grid1D grid;
};

struct ExponentFit {
  double gamma_fit = 0;
  double intercept = 0;
  int points = 0;
  double window_lo = 0, window_hi = 0;
};

struct Solution1D {
  Grid1D grid;
  std::vector<double> values;     // nodal u, zero exterior by construction
  double residual_norm = 0;       // interior collocation residual diagnostic
  double trace_left = 0, trace_right = 0;
  ExponentFit fit_left, fit_right;
};

/// Collocation matrix: row i approximates (L u_h)(x_i) for the continuous
/// piecewise-linear u_h vanishing at x_L, x_R and outside. Exact kernel
/// moments per panel; the singular cell (0,h) uses the local 3-point
/// quadratic model; gradient compensation via central slope for s > 1/2;
/// upwind first difference for the s = 1/2 drift. Exterior mass enters the
/// diagonal analytically through the zero extension.
DenseMatrix assemble_matrix(const StableKernel& K, const Grid1D& grid);

Solution1D solve_dirichlet(const DirichletProblem& problem,
                           const quad::QuadratureConfig& cfg = {});

enum class Endpoint { Left, Right };

/// Log-log slope of u against boundary distance over d in [5h, 0.05 |I|].
ExponentFit fit_boundary_exponent(const Solution1D& sol, Endpoint end);

/// Extrapolated limit of u/d^gamma at an endpoint (linear-in-d Richardson
/// over the near-boundary window).
double boundary_trace(const Solution1D& sol, Endpoint end, double gamma);

/// C^2 interpolant of the discrete solution for residual spot checks.
SmoothFunction1D solution_interpolant(const Solution1D& sol);

struct PohozaevReport {
  double lhs = 0, rhs = 0, rel_err = 0;
  double gamma = 0, gamma_star = 0;
  double trace_u_left = 0, trace_v_left = 0, trace_u_right = 0, trace_v_right = 0;
  int n_nodes = 0;
};

/// Pohozaev identity on an interval: solve Lu = f, L*v = g with zero
/// exterior data, compare the volume bilinear form against the boundary
/// trace product. e = +1 or -1 selects the direction.
PohozaevReport verify_pohozaev(const StableKernel& K, const SmoothFunction1D& f,
                               const SmoothFunction1D& g, double x_left, double x_right,
                               int e, int n_nodes, const quad::QuadratureConfig& cfg = {});

}  // namespace stabletool
