#include <doctest.h>

#include <cmath>
#include <random>

#include "stabletool/errors.hpp"
#include "stabletool/specfun.hpp"
#include "stabletool/symbol.hpp"

using namespace stabletool;

namespace {

StableKernel random_kernel(std::mt19937& rng, int dim, bool allow_half = true) {
  std::uniform_real_distribution<double> us(0.05, 0.95);
  std::uniform_real_distribution<double> uw(0.1, 2.0);
  std::uniform_real_distribution<double> ua(0, 2 * specfun::kPi);
  double s = us(rng);
  if (!allow_half && std::abs(s - 0.5) < 0.02) s += 0.05;
  std::vector<SphereAtom> atoms;
  if (dim == 1) {
    const double a = uw(rng);
    const double b = a * std::uniform_real_distribution<double>(-0.9, 0.9)(rng);
    if (std::abs(s - 0.5) < 1e-12) return StableKernel::kernel_1d(a, b, s);
    return StableKernel::kernel_1d(a, b, s);
  }
  const int m = 3 + int(rng() % 3);
  for (int k = 0; k < m; ++k) {
    const double th = ua(rng);
    const double w = uw(rng);
    atoms.push_back({{std::cos(th), std::sin(th)}, w});
    atoms.push_back({{-std::cos(th), -std::sin(th)}, w * 0.7});  // nonsymmetric pairs
  }
  if (std::abs(s - 0.5) < 0.02) s += 0.05;  // keep 2D samples away from the log branch
  return StableKernel(2, s, atoms);
}

}  // namespace

TEST_CASE("symmetric 1D symbol matches the closed form") {
  const auto K = StableKernel::kernel_1d(1.0, 0.0, 0.25);
  const auto sv = symbol(K, {1.0});
  CHECK(sv.a_part == doctest::Approx(5.013256549262001).epsilon(1e-13));  // 2 sqrt(2 pi)
  CHECK(sv.b_part == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("1D cross-check B/A = -(b/a) tan(pi s)") {
  for (double s : {0.15, 0.3, 0.45, 0.6, 0.75, 0.9}) {
    for (double b : {-0.7, -0.2, 0.4, 0.8}) {
      const auto K = StableKernel::kernel_1d(1.0, b, s);
      const auto sv = symbol(K, {1.0});
      CHECK(sv.b_part / sv.a_part ==
            doctest::Approx(-b * std::tan(specfun::kPi * s)).epsilon(1e-10));
    }
  }
}

TEST_CASE("s = 1/2 drift and log branch") {
  const auto K = StableKernel::kernel_1d(1.0, 0.3, 0.5);
  const auto sv = symbol(K, {1.0});
  CHECK(sv.a_part == doctest::Approx(specfun::kPi).epsilon(1e-13));  // pi * (a)
  CHECK(sv.b_part == doctest::Approx(0.3).epsilon(1e-13));           // drift only

  // odd density at s=1/2 in 2D exercises the log branch; parity must hold
  std::vector<SphereAtom> atoms;
  const int m = 16;
  for (int k = 0; k < m; ++k) {
    const double th = 2 * specfun::kPi * k / m;
    const double dens = 1.0 + 0.5 * std::sin(th);  // odd part present, first moment...
    atoms.push_back({{std::cos(th), std::sin(th)}, dens * 2 * specfun::kPi / m});
  }
  // enforce the s=1/2 cancellation by symmetrizing the first moment away
  Vec mom{0, 0};
  for (auto& a : atoms)
    for (int d = 0; d < 2; ++d) mom[d] += a.weight * a.direction[d];
  atoms.push_back({{-mom[0] / std::hypot(mom[0], mom[1]), -mom[1] / std::hypot(mom[0], mom[1])},
                   std::hypot(mom[0], mom[1])});
  const StableKernel Kh(2, 0.5, atoms);
  CHECK(Kh.validate().ok());
  const Vec xi{0.6, -0.8};
  const auto sp = symbol(Kh, xi);
  const auto sm = symbol(Kh, {-0.6, 0.8});
  CHECK(sp.a_part == doctest::Approx(sm.a_part).epsilon(1e-13));
  CHECK(sp.b_part == doctest::Approx(-sm.b_part).epsilon(1e-13));
  CHECK(sp.a_part > 0);
}

TEST_CASE("zero frequency raises") {
  const auto K = StableKernel::kernel_1d(1.0, 0.0, 0.25);
  CHECK_THROWS_AS(symbol(K, {0.0}), ZeroFrequencyError);
}

TEST_CASE("adjoint symbol equals symbol of adjoint kernel") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto K = random_kernel(rng, trial % 2 ? 2 : 1);
    const Vec xi = K.dimension() == 1 ? Vec{1.3} : Vec{0.8, -0.6};
    const auto a = adjoint_symbol(K, xi);
    const auto b = symbol(K.adjoint(), xi);
    CHECK(a.a_part == doctest::Approx(b.a_part).epsilon(1e-12));
    CHECK(a.b_part == doctest::Approx(b.b_part).epsilon(1e-12));
  }
}

TEST_CASE("parity, homogeneity, positivity on random kernels") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const auto K = random_kernel(rng, trial % 2 ? 2 : 1, /*allow_half=*/false);
    const double s = K.order();
    const Vec xi = K.dimension() == 1 ? Vec{0.9} : Vec{0.4, 1.1};
    Vec mxi = xi;
    for (auto& c : mxi) c = -c;
    const auto sv = symbol(K, xi);
    const auto svm = symbol(K, mxi);
    CHECK(sv.a_part > 0);
    CHECK(sv.a_part == doctest::Approx(svm.a_part).epsilon(1e-12));
    CHECK(sv.b_part == doctest::Approx(-svm.b_part).epsilon(1e-12));
    for (double t : {0.5, 2.0, 7.0}) {
      Vec txi = xi;
      for (auto& c : txi) c *= t;
      const auto svt = symbol(K, txi);
      CHECK(svt.a_part == doctest::Approx(std::pow(t, 2 * s) * sv.a_part).epsilon(1e-12));
      CHECK(svt.b_part == doctest::Approx(std::pow(t, 2 * s) * sv.b_part).epsilon(1e-12));
    }
  }
}

TEST_CASE("sqrt symbol: principal square root") {
  SymbolValue sv;
  sv.a_part = 3;
  sv.b_part = 4;
  const auto sh = sqrt_symbol_value(sv);
  CHECK(sh.a_part == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(sh.b_part == doctest::Approx(1.0).epsilon(1e-14));
  SymbolValue pure;
  pure.a_part = 7;
  pure.b_part = 0;
  const auto shp = sqrt_symbol_value(pure);
  CHECK(shp.a_part == doctest::Approx(std::sqrt(7.0)).epsilon(1e-15));
  CHECK(shp.b_part == 0.0);

  std::mt19937 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const auto K = random_kernel(rng, trial % 2 ? 2 : 1);
    const Vec xi = K.dimension() == 1 ? Vec{1.7} : Vec{-0.3, 0.9};
    const auto v = symbol(K, xi);
    const auto h = sqrt_symbol(K, xi);
    CHECK(h.a_part > 0);
    CHECK(h.a_part * h.a_part - h.b_part * h.b_part == doctest::Approx(v.a_part).epsilon(1e-12));
    CHECK(2 * h.a_part * h.b_part == doctest::Approx(v.b_part).epsilon(1e-12));
  }
}

TEST_CASE("IND positivity: A - cot(pi s)|B| > 0 away from s = 1/2") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 20; ++trial) {
    const auto K = random_kernel(rng, 2, /*allow_half=*/false);
    const double s = K.order();
    const double cot = specfun::cospi(s) / specfun::sinpi(s);
    for (const auto& nu : direction_grid(2, 64)) {
      const auto sv = symbol(K, nu);
      CHECK(sv.a_part - cot * std::abs(sv.b_part) > 0);
    }
  }
}
