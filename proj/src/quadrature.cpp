#include "stabletool/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "stabletool/errors.hpp"

namespace stabletool::quad {

namespace {

struct GLRule {
  std::vector<double> x, w;  // nodes/weights on [-1, 1]
};

// Nodes by Newton iteration on P_n; good to machine precision for n <= 64.
GLRule make_rule(int n) {
  GLRule r;
  r.x.resize(n);
  r.w.resize(n);
  const double pi = 3.14159265358979323846;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.x[i] = -x;
    r.x[n - 1 - i] = x;
    r.w[i] = r.w[n - 1 - i] = 2.0 / ((1 - x * x) * pp * pp);
  }
  return r;
}

const GLRule& rule16() {
  static const GLRule r = make_rule(16);
  return r;
}
const GLRule& rule32() {
  static const GLRule r = make_rule(32);
  return r;
}
const GLRule& rule(int order) {
  static const GLRule r8 = make_rule(8);
  static const GLRule r24 = make_rule(24);
  switch (order) {
    case 8: return r8;
    case 24: return r24;
    case 32: return rule32();
    default: return rule16();
  }
}

double gauss_rule(const Fn& f, double a, double b, const GLRule& r) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double s = 0;
  for (size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * f(c + h * r.x[i]);
  return h * s;
}

double adaptive_rec(const Fn& f, double a, double b, double abs_tol, double rel_tol, int depth) {
  const double c16 = gauss_rule(f, a, b, rule16());
  const double c32 = gauss_rule(f, a, b, rule32());
  const double err = std::abs(c32 - c16);
  if (err <= abs_tol || err <= rel_tol * std::abs(c32) || depth <= 0) return c32;
  const double m = 0.5 * (a + b);
  return adaptive_rec(f, a, m, 0.5 * abs_tol, rel_tol, depth - 1) +
         adaptive_rec(f, m, b, 0.5 * abs_tol, rel_tol, depth - 1);
}

}  // namespace

void QuadratureConfig::check() const {
  if (!(inner_cut > 0) || !(outer_cut > inner_cut))
    throw InvalidParameterError("QuadratureConfig: need 0 < inner_cut < outer_cut");
  if (!(abs_tol > 0) || !(rel_tol > 0))
    throw InvalidParameterError("QuadratureConfig: tolerances must be positive");
  if (graded_exponent < 1) throw InvalidParameterError("QuadratureConfig: graded_exponent < 1");
}

double gauss(const Fn& f, double a, double b, int order) { return gauss_rule(f, a, b, rule(order)); }

double adaptive(const Fn& f, double a, double b, double abs_tol, double rel_tol, int max_depth) {
  if (!(b > a)) return 0.0;
  return adaptive_rec(f, a, b, abs_tol, rel_tol, max_depth);
}

double adaptive_panels(const Fn& f, const std::vector<double>& pts, double abs_tol,
                       double rel_tol) {
  double total = 0;
  for (size_t i = 0; i + 1 < pts.size(); ++i)
    if (pts[i + 1] > pts[i])
      total += adaptive(f, pts[i], pts[i + 1], abs_tol / double(pts.size()), rel_tol);
  return total;
}

std::vector<double> geometric_toward(double singular_end, double far_end, double first_width) {
  std::vector<double> pts;
  double d = std::abs(far_end - singular_end);
  double w = std::max(first_width, d * 1e-15);
  const double sgn = (far_end > singular_end) ? 1.0 : -1.0;
  pts.push_back(singular_end + sgn * w);
  while (w < d) {
    w = std::min(2 * w, d);
    pts.push_back(singular_end + sgn * w);
  }
  if (sgn < 0) std::reverse(pts.begin(), pts.end());
  return pts;
}

double graded_toward_left(const Fn& f, double lo, double hi, double rel_first, int order) {
  if (!(hi > lo)) return 0.0;
  const double d = hi - lo;
  auto pts = geometric_toward(lo, hi, rel_first * d);
  // keep halving below the first width so integrable endpoint
  // singularities are resolved, not just clipped
  std::vector<double> sub;
  double w = rel_first * d;
  for (int k = 0; k < 40 && w > 4e-16 * d; ++k) {
    w *= 0.5;
    sub.push_back(lo + w);
  }
  std::reverse(sub.begin(), sub.end());
  double total = gauss(f, lo, sub.empty() ? pts.front() : sub.front(), order);
  for (size_t i = 0; i + 1 < sub.size(); ++i) total += gauss(f, sub[i], sub[i + 1], order);
  if (!sub.empty()) total += gauss(f, sub.back(), pts.front(), order);
  for (size_t i = 0; i + 1 < pts.size(); ++i) total += gauss(f, pts[i], pts[i + 1], order);
  return total;
}

}  // namespace stabletool::quad
