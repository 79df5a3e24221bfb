#include <doctest.h>

#include <cmath>

#include "stabletool/errors.hpp"
#include "stabletool/kernel.hpp"

using namespace stabletool;

TEST_CASE("kernel_1d construction") {
  const auto K = StableKernel::kernel_1d(1.0, 0.5, 0.25);
  CHECK(K.weight_plus() == doctest::Approx(1.5));
  CHECK(K.weight_minus() == doctest::Approx(0.5));
  CHECK(K.drift_1d() == 0.0);

  const auto Ks = StableKernel::kernel_1d(1.0, 0.3, 0.5);
  CHECK(Ks.weight_plus() == doctest::Approx(1.0));
  CHECK(Ks.weight_minus() == doctest::Approx(1.0));
  CHECK(Ks.drift_1d() == doctest::Approx(0.3));

  CHECK_THROWS_AS(StableKernel::kernel_1d(0.0, 0.0, 0.25), InvalidParameterError);
  CHECK_THROWS_AS(StableKernel::kernel_1d(1.0, 1.0, 0.25), InvalidParameterError);
}

TEST_CASE("even/odd split reconstructs the kernel") {
  const auto K = StableKernel::kernel_1d(1.0, 0.5, 0.25);
  auto [even, odd] = K.even_odd_split();
  // K_e = {(+-1, 1)}, K_o = {(+1, .5), (-1, -.5)}
  double we_p = 0, we_m = 0, wo_p = 0, wo_m = 0;
  for (const auto& a : even.atoms) (a.direction[0] > 0 ? we_p : we_m) += a.weight;
  for (const auto& a : odd.atoms) (a.direction[0] > 0 ? wo_p : wo_m) += a.weight;
  CHECK(we_p == doctest::Approx(1.0));
  CHECK(we_m == doctest::Approx(1.0));
  CHECK(wo_p == doctest::Approx(0.5));
  CHECK(wo_m == doctest::Approx(-0.5));
  // exact reconstruction
  CHECK(we_p + wo_p == K.weight_plus());
  CHECK(we_m + wo_m == K.weight_minus());
}

TEST_CASE("split parity on the represented directions") {
  const std::vector<SphereAtom> atoms = {{{0.6, 0.8}, 2.0}, {{-0.6, -0.8}, 0.5}, {{1.0, 0.0}, 1.0}};
  const StableKernel K(2, 0.3, atoms);
  auto [even, odd] = K.even_odd_split();
  for (size_t i = 0; i + 1 < even.atoms.size(); i += 2) {
    CHECK(even.atoms[i].weight == doctest::Approx(even.atoms[i + 1].weight));
    CHECK(odd.atoms[i].weight == doctest::Approx(-odd.atoms[i + 1].weight));
  }
}

TEST_CASE("adjoint is an involution and flips the odd part") {
  const auto K = StableKernel::kernel_1d(1.0, 0.4, 0.3);
  const auto Ks = K.adjoint();
  CHECK(Ks.weight_plus() == doctest::Approx(K.weight_minus()));
  CHECK(Ks.weight_minus() == doctest::Approx(K.weight_plus()));
  const auto Kss = Ks.adjoint();
  CHECK(Kss.weight_plus() == K.weight_plus());
  CHECK(Kss.weight_minus() == K.weight_minus());

  const auto Kd = StableKernel::kernel_1d(1.0, 0.3, 0.5);
  CHECK(Kd.adjoint().drift_1d() == doctest::Approx(-0.3));
  // symmetric kernel is self-adjoint
  const auto Ksym = StableKernel::kernel_1d(1.0, 0.0, 0.7);
  CHECK(Ksym.adjoint().weight_plus() == doctest::Approx(Ksym.weight_plus()));
}

TEST_CASE("ellipticity constants") {
  const auto K = StableKernel::kernel_1d(1.0, 0.5, 0.25);
  auto [lam, Lam] = K.ellipticity_constants();
  CHECK(Lam == doctest::Approx(2.0));
  CHECK(lam == doctest::Approx(2.0));

  // atoms along e1 only: moment vanishes for nu = e2
  const std::vector<SphereAtom> planar = {{{1.0, 0.0}, 1.0}, {{-1.0, 0.0}, 1.0}};
  const StableKernel K2(2, 0.3, planar);
  CHECK_THROWS_AS(K2.ellipticity_constants(), DegenerateKernelError);

  const StableKernel Kempty(1, 0.3, {});
  CHECK_THROWS_AS(Kempty.ellipticity_constants(), DegenerateKernelError);
}

TEST_CASE("validate report") {
  CHECK(StableKernel::kernel_1d(1.0, 0.5, 0.25).validate().ok());

  // s = 1/2 with unbalanced atoms: cancellation fails
  const std::vector<SphereAtom> bad = {{{1.0}, 2.0}, {{-1.0}, 1.0}};
  const StableKernel Kbad(1, 0.5, bad);
  const auto rep = Kbad.validate();
  CHECK(!rep.ok());

  const std::vector<SphereAtom> neg = {{{1.0}, 1.0}, {{-1.0}, -0.1}};
  CHECK(!StableKernel(1, 0.25, neg).validate().ok());
}

TEST_CASE("density samples materialize as quadrature atoms") {
  // uniform density 1 on S^1 at s=0.3: A(xi) is direction-independent
  std::string j = R"({"dimension":2,"order":0.3,"atoms":[],"density":{"rule":"uniform-angle","samples":[)";
  const int m = 64;
  for (int k = 0; k < m; ++k) {
    const double th = 2 * 3.14159265358979324 * k / m;
    j += "{\"direction\":[" + std::to_string(std::cos(th)) + "," + std::to_string(std::sin(th)) +
         "],\"value\":1.0}";
    if (k + 1 < m) j += ",";
  }
  j += "]}}";
  const auto K = StableKernel::from_json(j);
  CHECK(K.validate().ok());
  double total = 0;
  for (const auto& a : K.atoms()) total += a.weight;
  CHECK(total == doctest::Approx(2 * 3.14159265358979324).epsilon(1e-12));
}

TEST_CASE("json round trip and loader checks") {
  const auto K = StableKernel::kernel_1d(1.0, 0.3, 0.5);
  const auto K2 = StableKernel::from_json(K.to_json());
  CHECK(K2.order() == doctest::Approx(0.5));
  CHECK(K2.weight_plus() == doctest::Approx(1.0));
  CHECK(K2.drift_1d() == doctest::Approx(0.3));

  CHECK_THROWS_AS(StableKernel::from_json("{broken"), ConfigError);
  CHECK_THROWS_AS(
      StableKernel::from_json(R"({"dimension":1,"order":0.3,"atoms":[{"direction":[0.0],"weight":1}]})"),
      InvalidParameterError);  // zero direction vector
}
