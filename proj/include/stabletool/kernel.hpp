#pragma once

#include <string>
#include <vector>

namespace stabletool {

using Vec = std::vector<double>;

/// One spherical quadrature atom: direction on S^{n-1} plus a weight.
/// True point masses carry their mass; density samples carry
/// value * quadrature weight, so every sphere integral is a plain sum.
struct SphereAtom {
  Vec direction;
  double weight = 0;
};

/// Signed spherical data (even/odd parts are not kernels themselves).
struct SphericalPart {
  std::vector<SphereAtom> atoms;  // weights may be negative
};

struct ValidationCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool ok() const;
  std::string summary() const;
};

/// Spectral measure of an alpha-stable operator: atoms on S^{n-1},
/// order s in (0,1), drift b (s = 1/2 only). Immutable after construction.
class StableKernel {
 public:
  StableKernel(int dimension, double order, std::vector<SphereAtom> atoms, Vec drift = {});

  /// K(y) = (a + b_odd sign y)/|y|^{1+2s} for s != 1/2; for s = 1/2 the odd
  /// spherical part is forbidden and b_odd is stored as the drift.
  static StableKernel kernel_1d(double a, double b_odd, double s);

  int dimension() const { return dimension_; }
  double order() const { return order_; }
  const std::vector<SphereAtom>& atoms() const { return atoms_; }
  const Vec& drift() const { return drift_; }
  bool has_drift() const;

  /// Even/odd split on the symmetrized direction set; K_e + K_o
  /// reconstructs the kernel exactly on that set.
  std::pair<SphericalPart, SphericalPart> even_odd_split() const;

  /// Kernel of L*: spherical part K_e - K_o, drift negated.
  StableKernel adjoint() const;

  /// (lambda_est, Lambda_est): directional-moment infimum over a direction
  /// grid, and the total spherical mass. Throws DegenerateKernelError when
  /// lambda_est <= 1e-12 (measure supported on a hyperplane).
  std::pair<double, double> ellipticity_constants(int direction_grid_size = 64) const;

  ValidationReport validate() const;

  /// 1D convenience: weights on the +1 / -1 rays.
  double weight_plus() const;
  double weight_minus() const;
  /// 1D drift component (0 unless s = 1/2 with drift).
  double drift_1d() const;

  std::string to_json() const;
  static StableKernel from_json(const std::string& text);
  static StableKernel load(const std::string& path);

 private:
  int dimension_;
  double order_;
  std::vector<SphereAtom> atoms_;
  Vec drift_;
};

/// Directions for infimum scans and property grids: {+1,-1} in 1D, uniform
/// angles in 2D, a product grid for n >= 3.
std::vector<Vec> direction_grid(int dimension, int size);

double dot(const Vec& a, const Vec& b);
double norm(const Vec& a);

}  // namespace stabletool
