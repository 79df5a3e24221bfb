#include "stabletool/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "stabletool/errors.hpp"
#include "stabletool/specfun.hpp"

namespace stabletool {

using nlohmann::json;
using specfun::kPi;

namespace {

Vec normalized(Vec v) {
  double n = norm(v);
  if (!(n > 0)) throw InvalidParameterError("kernel: zero direction vector");
  for (auto& c : v) c /= n;
  return v;
}

bool antipodal(const Vec& a, const Vec& b, double tol = 1e-12) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += (a[i] + b[i]) * (a[i] + b[i]);
  return std::sqrt(s) < tol;
}

}  // namespace

double dot(const Vec& a, const Vec& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

bool ValidationReport::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks)
    os << (c.pass ? "[pass] " : "[FAIL] ") << c.name << (c.detail.empty() ? "" : ": " + c.detail)
       << "\n";
  return os.str();
}

StableKernel::StableKernel(int dimension, double order, std::vector<SphereAtom> atoms, Vec drift)
    : dimension_(dimension), order_(order), atoms_(std::move(atoms)), drift_(std::move(drift)) {
  if (dimension_ < 1) throw InvalidParameterError("kernel: dimension must be >= 1");
  if (!(order_ > 0 && order_ < 1)) throw InvalidParameterError("kernel: order s must be in (0,1)");
  for (auto& a : atoms_) {
    if (int(a.direction.size()) != dimension_)
      throw InvalidParameterError("kernel: direction dimension mismatch");
    a.direction = normalized(a.direction);
  }
  if (drift_.empty()) drift_.assign(dimension_, 0.0);
  if (int(drift_.size()) != dimension_)
    throw InvalidParameterError("kernel: drift dimension mismatch");
}

StableKernel StableKernel::kernel_1d(double a, double b_odd, double s) {
  if (!(a > 0)) throw InvalidParameterError("kernel_1d: need a > 0");
  if (!(s > 0 && s < 1)) throw InvalidParameterError("kernel_1d: need s in (0,1)");
  if (s == 0.5) {
    // b_odd becomes the drift; the drift bound is |b| <= Lambda = 2a
    if (!(std::abs(b_odd) <= 2 * a))
      throw InvalidParameterError("kernel_1d: drift exceeds Lambda = 2a");
    std::vector<SphereAtom> atoms = {{{1.0}, a}, {{-1.0}, a}};
    return StableKernel(1, s, std::move(atoms), {b_odd});
  }
  if (!(std::abs(b_odd) < a)) throw InvalidParameterError("kernel_1d: need |b_odd| < a");
  std::vector<SphereAtom> atoms = {{{1.0}, a + b_odd}, {{-1.0}, a - b_odd}};
  return StableKernel(1, s, std::move(atoms));
}

bool StableKernel::has_drift() const {
  for (double c : drift_)
    if (c != 0) return true;
  return false;
}

std::pair<SphericalPart, SphericalPart> StableKernel::even_odd_split() const {
  // pair atoms with their antipodes; unpaired directions get a phantom
  // antipode of weight zero
  SphericalPart even, odd;
  std::vector<bool> used(atoms_.size(), false);
  for (size_t i = 0; i < atoms_.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    double w_here = atoms_[i].weight, w_anti = 0;
    for (size_t j = i + 1; j < atoms_.size(); ++j) {
      if (!used[j] && antipodal(atoms_[i].direction, atoms_[j].direction)) {
        used[j] = true;
        w_anti += atoms_[j].weight;
      }
    }
    Vec anti = atoms_[i].direction;
    for (auto& c : anti) c = -c;
    const double we = 0.5 * (w_here + w_anti), wo = 0.5 * (w_here - w_anti);
    even.atoms.push_back({atoms_[i].direction, we});
    even.atoms.push_back({anti, we});
    odd.atoms.push_back({atoms_[i].direction, wo});
    odd.atoms.push_back({anti, -wo});
  }
  return {even, odd};
}

StableKernel StableKernel::adjoint() const {
  // K*(theta) = K(-theta): reflect every atom; drift flips
  std::vector<SphereAtom> atoms = atoms_;
  for (auto& a : atoms)
    for (auto& c : a.direction) c = -c;
  Vec d = drift_;
  for (auto& c : d) c = -c;
  return StableKernel(dimension_, order_, std::move(atoms), std::move(d));
}

std::pair<double, double> StableKernel::ellipticity_constants(int direction_grid_size) const {
  double Lambda = 0;
  for (const auto& a : atoms_) Lambda += a.weight;
  if (atoms_.empty() || Lambda <= 0)
    throw DegenerateKernelError("ellipticity: empty kernel");
  double lambda = std::numeric_limits<double>::infinity();
  for (const auto& nu : direction_grid(dimension_, direction_grid_size)) {
    double m = 0;
    for (const auto& a : atoms_) {
      const double d = std::abs(dot(nu, a.direction));
      if (d > 1e-14) m += a.weight * std::pow(d, 2 * order_);
    }
    lambda = std::min(lambda, m);
  }
  if (!(lambda > 1e-12))
    throw DegenerateKernelError("ellipticity: directional moment vanishes (hyperplane support)");
  return {lambda, Lambda};
}

ValidationReport StableKernel::validate() const {
  ValidationReport rep;
  bool nonneg = true;
  for (const auto& a : atoms_)
    if (a.weight < 0) nonneg = false;
  rep.checks.push_back({"nonnegativity", nonneg, nonneg ? "" : "negative atom weight"});

  if (order_ == 0.5) {
    Vec m(dimension_, 0.0);
    for (const auto& a : atoms_)
      for (int k = 0; k < dimension_; ++k) m[k] += a.weight * a.direction[k];
    double mm = norm(m);
    bool pass = mm <= 1e-12;
    std::ostringstream os;
    os << "first moment " << mm;
    rep.checks.push_back({"s=1/2 cancellation", pass, os.str()});
    double Lambda = 0;
    for (const auto& a : atoms_) Lambda += a.weight;
    bool db = norm(drift_) <= Lambda + 1e-15;
    rep.checks.push_back({"drift bound |b| <= Lambda", db, ""});
  } else {
    rep.checks.push_back({"no drift unless s=1/2", !has_drift(), ""});
  }

  bool ell = true;
  std::string detail;
  try {
    auto [lam, Lam] = ellipticity_constants();
    std::ostringstream os;
    os << "lambda " << lam << ", Lambda " << Lam;
    detail = os.str();
  } catch (const Error& e) {
    ell = false;
    detail = e.what();
  }
  rep.checks.push_back({"ellipticity", ell, detail});
  return rep;
}

double StableKernel::weight_plus() const {
  if (dimension_ != 1) throw InvalidParameterError("weight_plus: 1D kernels only");
  double w = 0;
  for (const auto& a : atoms_)
    if (a.direction[0] > 0) w += a.weight;
  return w;
}

double StableKernel::weight_minus() const {
  if (dimension_ != 1) throw InvalidParameterError("weight_minus: 1D kernels only");
  double w = 0;
  for (const auto& a : atoms_)
    if (a.direction[0] < 0) w += a.weight;
  return w;
}

double StableKernel::drift_1d() const {
  if (dimension_ != 1) throw InvalidParameterError("drift_1d: 1D kernels only");
  return drift_.empty() ? 0.0 : drift_[0];
}

std::string StableKernel::to_json() const {
  json j;
  j["dimension"] = dimension_;
  j["order"] = order_;
  j["atoms"] = json::array();
  for (const auto& a : atoms_) j["atoms"].push_back({{"direction", a.direction}, {"weight", a.weight}});
  if (has_drift()) j["drift"] = drift_;
  return j.dump(2);
}

StableKernel StableKernel::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("kernel JSON parse error: ") + e.what());
  }
  try {
    int n = j.at("dimension").get<int>();
    double s = j.at("order").get<double>();
    std::vector<SphereAtom> atoms;
    for (const auto& a : j.at("atoms")) {
      SphereAtom at;
      at.direction = a.at("direction").get<Vec>();
      at.weight = a.at("weight").get<double>();
      atoms.push_back(std::move(at));
    }
    // absolutely continuous part: samples with a named rule, materialized
    // into quadrature atoms (uniform-angle rule for n = 2)
    if (j.contains("density")) {
      const auto& d = j.at("density");
      std::string rule = d.value("rule", "uniform-angle");
      const auto& samples = d.at("samples");
      if (n == 2 && rule == "uniform-angle") {
        double w = 2.0 * kPi / double(samples.size());
        for (const auto& a : samples) {
          double v = a.at("value").get<double>();
          atoms.push_back({a.at("direction").get<Vec>(), v * w});
        }
      } else {
        throw ConfigError("kernel density: unsupported rule '" + rule + "' for n=" +
                          std::to_string(n));
      }
    }
    Vec drift = j.value("drift", Vec{});
    return StableKernel(n, s, std::move(atoms), std::move(drift));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("kernel JSON field error: ") + e.what());
  }
}

StableKernel StableKernel::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open kernel file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

std::vector<Vec> direction_grid(int dimension, int size) {
  std::vector<Vec> out;
  if (dimension == 1) {
    out.push_back({1.0});
    out.push_back({-1.0});
    return out;
  }
  if (dimension == 2) {
    for (int k = 0; k < size; ++k) {
      double th = 2.0 * kPi * k / size;
      out.push_back({std::cos(th), std::sin(th)});
    }
    return out;
  }
  // n >= 3: product grid in spherical angles (coarse; desk-scale scans)
  int m = std::max(4, int(std::round(std::sqrt(double(size)))));
  for (int i = 0; i < m; ++i) {
    double phi = kPi * (i + 0.5) / m;
    for (int k = 0; k < m; ++k) {
      double th = 2.0 * kPi * k / m;
      Vec v(dimension, 0.0);
      v[0] = std::sin(phi) * std::cos(th);
      v[1] = std::sin(phi) * std::sin(th);
      v[2] = std::cos(phi);
      out.push_back(normalized(v));
    }
  }
  return out;
}

}  // namespace stabletool
