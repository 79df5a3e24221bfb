#include <doctest.h>

#include <cmath>

#include "stabletool/quadrature.hpp"

using namespace stabletool;

TEST_CASE("gauss panels integrate polynomials exactly") {
  auto f = [](double x) { return 5 * x * x * x - x + 2; };
  CHECK(quad::gauss(f, -1, 3) == doctest::Approx(5.0 / 4 * (81 - 1) - 0.5 * (9 - 1) + 2 * 4)
                                     .epsilon(1e-14));
}

TEST_CASE("adaptive handles a boundary layer") {
  auto f = [](double x) { return std::exp(-50 * x) * 50; };
  CHECK(quad::adaptive(f, 0, 2, 1e-12, 1e-12) == doctest::Approx(1.0 - std::exp(-100)).epsilon(1e-11));
}

TEST_CASE("graded panels resolve algebraic endpoint singularities") {
  // int_0^1 x^{-0.7} dx = 1/0.3: strongly singular, panel-grading floor
  auto f = [](double x) { return std::pow(x, -0.7); };
  const double v = quad::graded_toward_left(f, 0, 1, 1e-10);
  CHECK(v == doctest::Approx(1.0 / 0.3).epsilon(1e-5));
  // int_0^1 x^{-0.3} dx = 1/0.7: mild singularity resolves fully
  auto f2 = [](double x) { return std::pow(x, -0.3); };
  CHECK(quad::graded_toward_left(f2, 0, 1, 1e-10) ==
        doctest::Approx(1.0 / 0.7).epsilon(1e-8));
}

TEST_CASE("config sanity checks") {
  quad::QuadratureConfig cfg;
  CHECK_NOTHROW(cfg.check());
  cfg.abs_tol = -1;
  CHECK_THROWS(cfg.check());
}
