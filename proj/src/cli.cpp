#include "stabletool/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stabletool/dirichlet.hpp"
#include "stabletool/errors.hpp"
#include "stabletool/evaluator.hpp"
#include "stabletool/exponent.hpp"
#include "stabletool/halfspace.hpp"
#include "stabletool/kernel.hpp"
#include "stabletool/symbol.hpp"

namespace stabletool {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> parse_csv_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ConfigError("cannot parse number '" + item + "'");
    }
  }
  if (out.empty()) throw ConfigError("empty numeric list");
  return out;
}

struct BetaGrid {
  double lo = 0, hi = 0;
  int count = 0;
};

BetaGrid parse_grid(const std::string& text) {
  BetaGrid g;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d", &g.lo, &g.hi, &g.count) != 3 || g.count < 1)
    throw ConfigError("grid must be lo:hi:count, got '" + text + "'");
  return g;
}

// function specs for -f / -g: "poly:c0,c1,..." or "one"
SmoothFunction1D parse_function_spec(const std::string& spec) {
  if (spec == "one") return profiles::polynomial({1.0});
  if (spec.rfind("poly:", 0) == 0)
    return profiles::polynomial(parse_csv_doubles(spec.substr(5)));
  throw ConfigError("unknown function spec '" + spec + "' (use one | poly:c0,c1,...)");
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ConfigError("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int cmd_validate(const std::string& kernel_path, const std::string& out,
                 const std::string& format) {
  const StableKernel K = StableKernel::load(kernel_path);
  const auto rep = K.validate();
  Output o(out);
  if (format == "json") {
    json j{{"ok", rep.ok()}, {"checks", json::array()}};
    for (const auto& c : rep.checks)
      j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    o.stream() << j.dump(2) << "\n";
  } else {
    o.stream() << rep.summary();
  }
  return rep.ok() ? 0 : 1;
}

int cmd_symbol(const std::string& kernel_path, const std::vector<std::string>& xi_specs,
               const std::string& out) {
  const StableKernel K = StableKernel::load(kernel_path);
  Output o(out);
  auto& os = o.stream();
  for (int d = 0; d < K.dimension(); ++d) os << "xi" << d << ",";
  os << "A,B,A_sharp,B_sharp\n";
  for (const auto& spec : xi_specs) {
    const Vec xi = parse_csv_doubles(spec);
    const SymbolValue sv = symbol(K, xi);
    const SymbolValue sh = sqrt_symbol_value(sv);
    for (double c : xi) os << fmt17(c) << ",";
    os << fmt17(sv.a_part) << "," << fmt17(sv.b_part) << "," << fmt17(sh.a_part) << ","
       << fmt17(sh.b_part) << "\n";
  }
  return 0;
}

int cmd_exponent(const std::string& kernel_path, const std::vector<std::string>& nu_specs,
                 const std::string& out) {
  const StableKernel K = StableKernel::load(kernel_path);
  Output o(out);
  auto& os = o.stream();
  for (int d = 0; d < K.dimension(); ++d) os << "nu" << d << ",";
  os << "gamma,gamma_star,c\n";
  for (const auto& spec : nu_specs) {
    const Vec nu = parse_csv_doubles(spec);
    const auto r = exponent_report(K, nu);
    for (double c : r.normal) os << fmt17(c) << ",";
    os << fmt17(r.gamma) << "," << fmt17(r.gamma_star) << "," << fmt17(r.ibp_constant) << "\n";
  }
  return 0;
}

int cmd_kappa(double a, double b, double s, const std::string& beta_grid,
              const std::string& out) {
  const BetaGrid g = parse_grid(beta_grid);
  Output o(out);
  auto& os = o.stream();
  os << "beta,kappa\n";
  for (int k = 0; k < g.count; ++k) {
    const double beta = g.count == 1 ? g.lo : g.lo + (g.hi - g.lo) * k / double(g.count - 1);
    const double kp = (s == 0.5) ? kappa_1d_half(a, b, beta) : kappa_1d(a, b, s, beta);
    os << fmt17(beta) << "," << fmt17(kp) << "\n";
  }
  return 0;
}

int cmd_verify_power(const std::string& kernel_path, const std::string& beta_grid,
                     const std::string& x_list, double tol, const std::string& out) {
  const StableKernel K = StableKernel::load(kernel_path);
  const BetaGrid g = parse_grid(beta_grid);
  const Vec xs = parse_csv_doubles(x_list);
  Output o(out);
  auto& os = o.stream();
  os << "beta,x,numeric,closed_form,rel_err\n";
  bool ok = true;
  for (int k = 0; k < g.count; ++k) {
    const double beta = g.count == 1 ? g.lo : g.lo + (g.hi - g.lo) * k / double(g.count - 1);
    const double closed = kappa_for_kernel(K, beta);
    for (double x : xs) {
      const double num = apply_to_power(K, beta, x);
      const double expect = closed * std::pow(x, beta - 2 * K.order());
      const double rel = std::abs(num - expect) / std::max(std::abs(expect), 1e-14);
      ok = ok && rel <= tol;
      os << fmt17(beta) << "," << fmt17(x) << "," << fmt17(num) << "," << fmt17(expect) << ","
         << fmt17(rel) << "\n";
    }
  }
  return ok ? 0 : 1;
}

int cmd_verify_ibp(const std::string& kernel_path, double cutoff_radius, double tol,
                   const std::string& out) {
  const StableKernel K = StableKernel::load(kernel_path);
  const SmoothFunction1D eta = profiles::bump(cutoff_radius);
  const IbpReport rep = verify_flat_ibp(K, eta, eta);
  json j{{"lhs", rep.lhs},       {"rhs", rep.rhs},
         {"rel_err", rep.rel_err}, {"gamma", rep.gamma},
         {"gamma_star", rep.gamma_star}, {"tol", tol},
         {"pass", rep.rel_err <= tol}};
  Output o(out);
  o.stream() << j.dump(2) << "\n";
  return rep.rel_err <= tol ? 0 : 1;
}

int cmd_solve(const std::string& kernel_path, const std::string& interval, int nodes,
              const std::string& fspec, const std::string& out, const std::string& format) {
  const StableKernel K = StableKernel::load(kernel_path);
  const Vec ab = parse_csv_doubles(interval);
  if (ab.size() != 2) throw ConfigError("--interval needs a,b");
  const SmoothFunction1D f = parse_function_spec(fspec);
  DirichletProblem prob{K, [&f](double x) { return f(x); }, Grid1D(ab[0], ab[1], nodes)};
  const Solution1D sol = solve_dirichlet(prob);

  json diag{{"residual_norm", sol.residual_norm},
            {"gamma_fit_left", sol.fit_left.gamma_fit},
            {"gamma_fit_right", sol.fit_right.gamma_fit},
            {"trace_left", sol.trace_left},
            {"trace_right", sol.trace_right}};
  Output o(out);
  auto& os = o.stream();
  if (format == "json") {
    json j = diag;
    j["x"] = json::array();
    j["u"] = json::array();
    for (int i = 0; i < sol.grid.n_nodes; ++i) {
      j["x"].push_back(sol.grid.node(i));
      j["u"].push_back(sol.values[i]);
    }
    os << j.dump(2) << "\n";
  } else {
    os << "x,u\n";
    for (int i = 0; i < sol.grid.n_nodes; ++i)
      os << fmt17(sol.grid.node(i)) << "," << fmt17(sol.values[i]) << "\n";
    if (!out.empty()) {
      std::ofstream dj(out + ".diag.json");
      dj << diag.dump(2) << "\n";
    } else {
      std::cerr << diag.dump(2) << "\n";
    }
  }
  return 0;
}

int cmd_pohozaev(const std::string& kernel_path, const std::string& interval,
                 const std::string& fspec, const std::string& gspec, int nodes, int refine,
                 double tol, const std::string& out) {
  const StableKernel K = StableKernel::load(kernel_path);
  const Vec ab = parse_csv_doubles(interval);
  if (ab.size() != 2) throw ConfigError("--interval needs a,b");
  const SmoothFunction1D f = parse_function_spec(fspec);
  const SmoothFunction1D g = parse_function_spec(gspec);
  json table = json::array();
  double last_rel = 0;
  for (int l = 0; l < std::max(1, refine); ++l) {
    const int n = nodes << l;
    const auto rep = verify_pohozaev(K, f, g, ab[0], ab[1], +1, n);
    table.push_back({{"nodes", n}, {"lhs", rep.lhs}, {"rhs", rep.rhs}, {"rel_err", rep.rel_err}});
    last_rel = rep.rel_err;
  }
  json j{{"table", table}, {"tol", tol}, {"pass", last_rel <= tol}};
  Output o(out);
  o.stream() << j.dump(2) << "\n";
  return last_rel <= tol ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"stabletool: non-symmetric stable operators in 1D"};
  app.require_subcommand(1);

  std::string kernel_path, out, format = "csv";
  double tol = 1e-3;

  auto add_common = [&](CLI::App* sub, bool needs_kernel = true) {
    if (needs_kernel)
      sub->add_option("--kernel", kernel_path, "kernel JSON file")->required();
    sub->add_option("--out", out, "output path (default stdout)");
    sub->add_option("--tol", tol, "tolerance");
    sub->add_option("--format", format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  auto* validate = app.add_subcommand("validate-kernel", "check kernel invariants");
  add_common(validate);

  auto* sym = app.add_subcommand("symbol", "Fourier symbol at frequencies");
  std::vector<std::string> xi_specs;
  add_common(sym);
  sym->add_option("--xi", xi_specs, "frequency (comma separated), repeatable")->required();

  auto* expo = app.add_subcommand("exponent", "boundary exponents and IBP constant");
  std::vector<std::string> nu_specs;
  add_common(expo);
  expo->add_option("--nu", nu_specs, "unit normal (comma separated), repeatable")->required();

  auto* kap = app.add_subcommand("kappa", "kappa_{beta,L} on a beta grid");
  double ka = 1, kb = 0, ks = 0.25;
  std::string beta_grid = "0.05:0.45:9";
  add_common(kap, false);
  kap->add_option("--a", ka, "even coefficient a > 0")->required();
  kap->add_option("--b", kb, "odd coefficient (drift when s = 1/2)");
  kap->add_option("--s", ks, "order s")->required();
  kap->add_option("--beta-grid", beta_grid, "lo:hi:count");

  auto* vp = app.add_subcommand("verify-power", "quadrature vs closed-form kappa");
  std::string x_list = "0.5,1,2";
  std::string vp_grid = "";
  add_common(vp);
  vp->add_option("--beta-grid", vp_grid, "lo:hi:count")->required();
  vp->add_option("--x-grid", x_list, "evaluation points");

  auto* ibp = app.add_subcommand("verify-ibp", "flat integration-by-parts identity");
  double cutoff_radius = 4.0;
  add_common(ibp);
  ibp->add_option("--cutoff-radius", cutoff_radius, "support radius of the bump cutoffs");

  auto* solve = app.add_subcommand("solve", "Dirichlet problem on an interval");
  std::string interval = "-1,1", fspec = "one";
  int nodes = 256;
  add_common(solve);
  solve->add_option("--interval", interval, "a,b");
  solve->add_option("--nodes", nodes, "node count");
  solve->add_option("--f", fspec, "right-hand side (one | poly:c0,c1,...)");

  auto* poh = app.add_subcommand("pohozaev", "Pohozaev identity convergence table");
  std::string gspec = "one";
  int refine = 1;
  add_common(poh);
  poh->add_option("--interval", interval, "a,b");
  poh->add_option("--nodes", nodes, "coarsest node count");
  poh->add_option("--refine", refine, "number of refinement levels");
  poh->add_option("--f", fspec, "rhs for L");
  poh->add_option("--g", gspec, "rhs for L*");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(kernel_path, out, format);
    if (sym->parsed()) return cmd_symbol(kernel_path, xi_specs, out);
    if (expo->parsed()) return cmd_exponent(kernel_path, nu_specs, out);
    if (kap->parsed()) return cmd_kappa(ka, kb, ks, beta_grid, out);
    if (vp->parsed()) return cmd_verify_power(kernel_path, vp_grid, x_list, tol, out);
    if (ibp->parsed()) return cmd_verify_ibp(kernel_path, cutoff_radius, tol, out);
    if (solve->parsed()) return cmd_solve(kernel_path, interval, nodes, fspec, out, format);
    if (poh->parsed())
      return cmd_pohozaev(kernel_path, interval, fspec, gspec, nodes, refine, tol, out);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace stabletool
