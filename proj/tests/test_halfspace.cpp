#include <doctest.h>

#include <cmath>

#include "stabletool/exponent.hpp"
#include "stabletool/halfspace.hpp"
#include "stabletool/specfun.hpp"

using namespace stabletool;
namespace sf = stabletool::specfun;

TEST_CASE("flat IBP: symmetric kernel reproduces Gamma(1+s)^2 A") {
  const auto K = StableKernel::kernel_1d(1.0, 0.0, 0.3);
  const auto eta = profiles::bump(4.0);
  const auto rep = verify_flat_ibp(K, eta, eta);
  const auto sv = symbol(K, {1.0});
  const double target = sf::gamma_fn(1.3) * sf::gamma_fn(1.3) * sv.a_part;
  CHECK(rep.rhs == doctest::Approx(target).epsilon(1e-12));
  CHECK(rep.rel_err < 1e-3);
}

TEST_CASE("flat IBP: nonsymmetric s < 1/2") {
  const auto K = StableKernel::kernel_1d(1.0, 0.3, 0.3);
  const auto eta = profiles::bump(4.0);
  const auto rep = verify_flat_ibp(K, eta, eta);
  CHECK(rep.rel_err < 1e-3);
  CHECK(rep.rhs == doctest::Approx(3.8547013249103865).epsilon(1e-12));
  // the profile-coefficient pipeline reproduces the same constant
  const auto pc = halfspace_profile_coeffs(K, {1.0}, rep.gamma);
  CHECK(pc.c_combined == doctest::Approx(rep.rhs).epsilon(1e-9));
}

TEST_CASE("flat IBP: cutoff vanishing at the boundary zeroes the identity") {
  const auto K = StableKernel::kernel_1d(1.0, 0.3, 0.35);
  // bump supported on (1, 3): eta(0) = 0
  auto base = profiles::bump(1.0);
  SmoothFunction1D eta;
  eta.value = [base](double t) { return base(t - 2.0); };
  eta.derivative = [base](double t) { return base.d1(t - 2.0); };
  eta.second_derivative = [base](double t) { return base.d2(t - 2.0); };
  eta.support_left = 1.0;
  eta.support_right = 3.0;
  const auto rep = verify_flat_ibp(K, eta, eta);
  CHECK(rep.rhs == 0.0);
  CHECK(std::abs(rep.lhs) < 1e-6 * 10);  // scale of the s<1/2 constants here is O(1)
}

TEST_CASE("flat IBP lhs is bilinear in the cutoffs") {
  const auto K = StableKernel::kernel_1d(1.0, 0.4, 0.3);
  const auto e1 = profiles::bump(4.0);
  const auto e2 = profiles::bump(3.0);
  SmoothFunction1D comb;
  comb.value = [e1, e2](double t) { return e1(t) + 2 * e2(t); };
  comb.derivative = [e1, e2](double t) { return e1.d1(t) + 2 * e2.d1(t); };
  comb.second_derivative = [e1, e2](double t) { return e1.d2(t) + 2 * e2.d2(t); };
  comb.support_left = -4.0;
  comb.support_right = 4.0;
  const auto tau = profiles::bump(4.0);
  const double lhs_comb = verify_flat_ibp(K, comb, tau).lhs;
  const double lhs_1 = verify_flat_ibp(K, e1, tau).lhs;
  const double lhs_2 = verify_flat_ibp(K, e2, tau).lhs;
  CHECK(lhs_comb == doctest::Approx(lhs_1 + 2 * lhs_2).epsilon(1e-8));
}

TEST_CASE("duality swap leaves the report invariant") {
  const auto K = StableKernel::kernel_1d(1.0, 0.35, 0.3);
  const auto eta = profiles::bump(4.0);
  const auto tau = profiles::bump(3.5);
  const auto fwd = verify_flat_ibp(K, eta, tau);
  const auto swp = verify_flat_ibp(K.adjoint(), tau, eta);
  CHECK(fwd.rhs == doctest::Approx(swp.rhs).epsilon(1e-12));
  CHECK(fwd.lhs == doctest::Approx(swp.lhs).epsilon(1e-3));
}

TEST_CASE("shifted energy probe matches the direct lhs") {
  const auto K = StableKernel::kernel_1d(1.0, 0.3, 0.3);
  const auto eta = profiles::bump(4.0);
  const auto probes = shifted_energy_probe(K, eta, eta, {0.08, 0.04, 0.02, 0.01, 0.0});
  CHECK(probes.size() == 5);
  CHECK(std::isfinite(probes[0].second));
  // E_0 equals the defining integral with no shift
  const auto again = shifted_energy_probe(K, eta, eta, {0.0});
  CHECK(again[0].second == doctest::Approx(probes[4].second).epsilon(1e-12));

  const double slope = shifted_energy_slope(K, eta, eta, {0.08, 0.04, 0.02, 0.01});
  const double lhs = verify_flat_ibp(K, eta, eta).lhs;
  CHECK(std::abs(slope - lhs) / std::abs(lhs) < 5e-3);
}
