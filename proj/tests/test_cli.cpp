#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "stabletool/cli.hpp"
#include "stabletool/kernel.hpp"

using namespace stabletool;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content) {
    path = std::string("/tmp/stabletool_test_") + name;
    std::ofstream f(path);
    f << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli dispatch and exit codes") {
  const TempFile kfile("k.json", StableKernel::kernel_1d(1.0, 0.5, 0.25).to_json());

  SUBCASE("unknown flag exits 2") {
    CHECK(run_cli({"exponent", "--kernel", kfile.path, "--nu", "1", "--bogus"}) == 2);
  }
  SUBCASE("missing subcommand exits 2") { CHECK(run_cli({}) == 2); }
  SUBCASE("missing kernel file exits 2") {
    CHECK(run_cli({"exponent", "--kernel", "/nonexistent.json", "--nu", "1"}) == 2);
  }

  SUBCASE("exponent writes gamma, gamma*, c") {
    const std::string out = "/tmp/stabletool_test_exp.csv";
    CHECK(run_cli({"exponent", "--kernel", kfile.path, "--nu", "1", "--out", out}) == 0);
    const std::string text = slurp(out);
    CHECK(text.find("gamma,gamma_star,c") != std::string::npos);
    CHECK(text.find("0.1024163823495667") != std::string::npos);
    std::remove(out.c_str());
  }

  SUBCASE("deterministic output") {
    const std::string o1 = "/tmp/stabletool_test_d1.csv", o2 = "/tmp/stabletool_test_d2.csv";
    CHECK(run_cli({"symbol", "--kernel", kfile.path, "--xi", "1", "--xi", "2.5", "--out", o1}) == 0);
    CHECK(run_cli({"symbol", "--kernel", kfile.path, "--xi", "1", "--xi", "2.5", "--out", o2}) == 0);
    CHECK(slurp(o1) == slurp(o2));
    CHECK(!slurp(o1).empty());
    std::remove(o1.c_str());
    std::remove(o2.c_str());
  }

  SUBCASE("validate-kernel pass and fail") {
    CHECK(run_cli({"validate-kernel", "--kernel", kfile.path}) == 0);
    const TempFile bad("bad.json",
                       R"({"dimension":1,"order":0.5,"atoms":[{"direction":[1.0],"weight":2.0},
                           {"direction":[-1.0],"weight":1.0}]})");
    CHECK(run_cli({"validate-kernel", "--kernel", bad.path}) == 1);
  }

  SUBCASE("kappa grid") {
    const std::string out = "/tmp/stabletool_test_kappa.csv";
    CHECK(run_cli({"kappa", "--a", "1", "--b", "0.5", "--s", "0.25", "--beta-grid",
                   "0.05:0.45:5", "--out", out}) == 0);
    CHECK(slurp(out).find("beta,kappa") != std::string::npos);
    std::remove(out.c_str());
  }
}

TEST_CASE("cli verification gate: verify-power") {
  const TempFile kfile("k2.json", StableKernel::kernel_1d(1.0, 0.5, 0.3).to_json());
  const std::string out = "/tmp/stabletool_test_vp.csv";
  CHECK(run_cli({"verify-power", "--kernel", kfile.path, "--beta-grid", "0.1:0.5:3", "--x-grid",
                 "0.5,1,2", "--tol", "1e-4", "--out", out}) == 0);
  // impossible tolerance: verification failure is exit 1
  CHECK(run_cli({"verify-power", "--kernel", kfile.path, "--beta-grid", "0.1:0.5:3", "--x-grid",
                 "1", "--tol", "1e-16", "--out", out}) == 1);
  std::remove(out.c_str());
}
