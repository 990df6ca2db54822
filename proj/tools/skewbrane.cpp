// skewbrane: verification of the explicit skew constructions, generic
// parallel-pair scans, permutation signs and perturbation budgets.
//
// Exit status: 0 pass, 1 check failed, 2 usage or configuration error.

#include "skewbrane/errors.hpp"
#include "skewbrane/grassmann.hpp"
#include "skewbrane/hopf.hpp"
#include "skewbrane/report.hpp"
#include "skewbrane/search.hpp"
#include "skewbrane/skew_torus.hpp"
#include "skewbrane/surfaces.hpp"
#include "skewbrane/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <thread>

using namespace skewbrane;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  json surface = nullptr;  // name or {kind, params}
  std::optional<double> eps, delta, tol_accept, tol_reject;
  std::optional<int> grid, threads;
  std::optional<std::uint64_t> seed;
  std::string out, csv_dump;
  bool antipodal = false;
};

// Keys accepted in a --config file; the same names as the long flags.
const std::set<std::string> kConfigKeys = {"surface", "eps",     "delta", "grid",     "tol-accept", "tol-reject",
                                           "threads", "seed",    "out",   "csv-dump", "antipodal"};

RunConfig load_config(const std::string& path) {
  RunConfig rc;
  if (path.empty()) return rc;
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (!kConfigKeys.count(key)) throw ConfigError("unknown config key '" + key + "'");
  }
  try {
    if (j.contains("surface")) rc.surface = j["surface"];
    if (j.contains("eps")) rc.eps = j["eps"].get<double>();
    if (j.contains("delta")) rc.delta = j["delta"].get<double>();
    if (j.contains("tol-accept")) rc.tol_accept = j["tol-accept"].get<double>();
    if (j.contains("tol-reject")) rc.tol_reject = j["tol-reject"].get<double>();
    if (j.contains("grid")) rc.grid = j["grid"].get<int>();
    if (j.contains("threads")) rc.threads = j["threads"].get<int>();
    if (j.contains("seed")) rc.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("out")) rc.out = j["out"].get<std::string>();
    if (j.contains("csv-dump")) rc.csv_dump = j["csv-dump"].get<std::string>();
    if (j.contains("antipodal")) rc.antipodal = j["antipodal"].get<bool>();
  } catch (const json::type_error& e) {
    throw ConfigError(std::string("config file: ") + e.what());
  }
  return rc;
}

// Command-line values; each one set on the command line overrides the file.
struct Flags {
  std::string config, surface, out, csv_dump;
  double eps = 0, delta = 0, tol_accept = 0, tol_reject = 0;
  int grid = 0, threads = 0;
  std::uint64_t seed = 0;
  bool antipodal = false;
  std::map<std::string, CLI::Option*> opts;

  void add(CLI::App* cmd, bool surface_flags) {
    cmd->add_option("--config", config, "JSON file with the same keys as the flags");
    opts["threads"] = cmd->add_option("--threads", threads, "Worker threads (default: available parallelism)");
    opts["seed"] = cmd->add_option("--seed", seed, "Seed for random surfaces and sample points");
    opts["grid"] = cmd->add_option("--grid", grid, "Grid resolution per coordinate");
    opts["out"] = cmd->add_option("--out", out, "Write the JSON report here");
    if (!surface_flags) return;
    opts["surface"] = cmd->add_option("--surface", surface, "Surface name: " + join(surface_names()));
    opts["eps"] = cmd->add_option("--eps", eps, "Perturbation size");
    opts["delta"] = cmd->add_option("--delta", delta, "Torus coupling δ");
    opts["tol-accept"] = cmd->add_option("--tol-accept", tol_accept, "Defect below which a pair is accepted");
    opts["tol-reject"] = cmd->add_option("--tol-reject", tol_reject, "Defect above which a seed is discarded");
    opts["csv-dump"] = cmd->add_option("--csv-dump", csv_dump, "Write a defect CSV slice here");
    opts["antipodal"] = cmd->add_flag("--antipodal", antipodal, "Scan only pairs (x, -x)");
  }

  bool given(const std::string& key) const {
    const auto it = opts.find(key);
    return it != opts.end() && it->second->count() > 0;
  }

  RunConfig resolve() const {
    RunConfig rc = load_config(config);
    if (given("surface")) rc.surface = surface;
    if (given("eps")) rc.eps = eps;
    if (given("delta")) rc.delta = delta;
    if (given("tol-accept")) rc.tol_accept = tol_accept;
    if (given("tol-reject")) rc.tol_reject = tol_reject;
    if (given("grid")) rc.grid = grid;
    if (given("threads")) rc.threads = threads;
    if (given("seed")) rc.seed = seed;
    if (given("out")) rc.out = out;
    if (given("csv-dump")) rc.csv_dump = csv_dump;
    if (given("antipodal")) rc.antipodal = antipodal;
    return rc;
  }

  static std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
    return s;
  }
};

int default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

SurfaceSpec surface_spec(const RunConfig& rc) {
  if (rc.surface.is_null()) throw ConfigError("--surface is required");
  SurfaceSpec spec = SurfaceSpec::from_json(rc.surface);
  if (rc.eps) spec.params["eps"] = *rc.eps;
  if (rc.delta) spec.params["delta"] = *rc.delta;
  if (rc.seed && spec.kind == "graph-sphere") spec.params["seed"] = *rc.seed;
  validate_surface_spec(spec);
  return spec;
}

SearchConfig search_config(const RunConfig& rc, const Immersion& surface) {
  SearchConfig cfg;
  // Product grids of 3-dimensional domains grow as n⁶.
  cfg.resolution = rc.grid.value_or(surface.dim() >= 3 && !rc.antipodal ? 8 : 32);
  if (rc.tol_accept) cfg.tau_accept = *rc.tol_accept;
  if (rc.tol_reject) cfg.tau_reject = *rc.tol_reject;
  cfg.threads = rc.threads.value_or(default_threads());
  cfg.antipodal = rc.antipodal;
  cfg.validate();
  return cfg;
}

void write_json(const std::string& path, const json& j) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write '" + path + "'");
  f << j.dump(2) << '\n';
}

void print_summary(const SkewReport& r) {
  std::cout << "surface " << r.surface << "  grid " << r.resolution << "  points " << r.grid_points
            << "  pairs scanned " << r.pairs_scanned << (r.antipodal ? "  (antipodal)" : "") << '\n';
  for (SignClass s : {SignClass::kPositive, SignClass::kNegative}) {
    const SignSummary& m = r.summary(s);
    std::cout << "  " << std::setw(8) << to_string(s) << ": pairs " << m.pairs << "  unresolved " << m.unresolved
              << "  seeds " << m.seeds << "  min defect " << m.min_defect << "  " << to_string(m.status) << '\n';
  }
  std::cout << "status " << to_string(r.status) << '\n';
  for (const auto& p : r.pairs) {
    std::cout << "  " << to_string(p.sign) << "  p = " << p.p.transpose() << "  q = " << p.q.transpose()
              << "  defect " << p.defect << '\n';
  }
}

int cmd_verify(const std::string& target, const Flags& fl) {
  const RunConfig rc = fl.resolve();
  VerifyOptions opt;
  opt.threads = rc.threads.value_or(default_threads());
  if (rc.seed) opt.seed = *rc.seed;
  if (rc.grid) opt.resolution = *rc.grid;
  const VerifyResult r = run_verify(target, opt);
  std::cout << "verify " << r.target << "  (" << std::fixed << std::setprecision(1) << r.seconds << " s)\n"
            << std::defaultfloat << std::setprecision(6);
  for (const auto& c : r.checks) {
    std::cout << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << " = " << c.value << "  (expected "
              << c.expected << ")\n";
  }
  json j = to_json(r);
  j["command"] = "verify";
  j["seed"] = opt.seed;
  write_json(rc.out, j);
  if (!r.pass()) {
    for (const auto& name : r.failures()) std::cerr << "check failed: " << name << '\n';
    return kExitFail;
  }
  return kExitPass;
}

int cmd_pairs(const Flags& fl, bool double_points) {
  const RunConfig rc = fl.resolve();
  const SurfaceSpec spec = surface_spec(rc);
  const BuiltSurface built = build_surface(spec);
  const SearchConfig cfg = search_config(rc, built.surface);

  json j = {{"command", double_points ? "double-points" : "pairs"},
            {"surface", {{"kind", spec.kind}, {"params", built.resolved_params}}},
            {"config", to_json(cfg)}};
  if (built.budget) j["budget"] = to_json(*built.budget);

  if (double_points) {
    const DoublePointReport dp = find_double_points(built.surface, cfg);
    std::cout << "surface " << dp.surface << "  double points " << dp.points.size() << "  signed count "
              << dp.signed_count << "  non-transversal " << dp.flagged << '\n';
    for (const auto& d : dp.points) {
      std::cout << "  p = " << d.p.transpose() << "  q = " << d.q.transpose() << "  sign " << d.sign
                << "  margin " << d.margin << '\n';
    }
    j["report"] = to_json(dp);
    write_json(rc.out, j);
    return kExitPass;
  }

  const SkewReport rep = cfg.antipodal ? antipodal_scan(built.surface, cfg) : scan_pairs(built.surface, cfg);
  print_summary(rep);
  j["report"] = to_json(rep);
  write_json(rc.out, j);
  if (!rc.csv_dump.empty()) {
    std::ofstream csv(rc.csv_dump, std::ios::binary);
    if (!csv) throw ConfigError("cannot write '" + rc.csv_dump + "'");
    write_defect_csv(built.surface, cfg.resolution, csv);
  }
  return kExitPass;
}

int cmd_perm_sign(int p, int q, const std::string& out) {
  if (p <= 0 || q <= 0 || p % 2 || q % 2) throw ConfigError("perm-sign needs positive even p and q");
  const PermutationSign s = transpose_permutation_sign(p, q);
  const int formula_sign = s.formula_parity == 0 ? 1 : -1;
  std::cout << "p q sign inversions (-1)^(pq/4)\n"
            << p << ' ' << q << ' ' << s.sign << ' ' << s.inversions << ' ' << formula_sign << '\n';
  json j = to_json(s, p, q);
  j["command"] = "perm-sign";
  write_json(out, j);
  if (!s.consistent()) {
    std::cerr << "check failed: inversion parity disagrees with (pq/4) mod 2\n";
    return kExitFail;
  }
  return kExitPass;
}

int cmd_eps_bound(const Flags& fl) {
  const RunConfig rc = fl.resolve();
  const SurfaceSpec spec = surface_spec(rc);
  EpsilonBudget b;
  json params = json::object();
  if (spec.kind == "skew-torus") {
    const double delta = rc.delta.value_or(spec.params.value("delta", 0.1));
    b = torus_epsilon_budget(skew_torus_functions(delta), rc.grid.value_or(128));
    params = {{"delta", delta}};
  } else if (spec.kind == "torus0") {
    b = torus_epsilon_budget(TorusFunctions{}, rc.grid.value_or(128));
  } else if (spec.kind == "skew-sphere3") {
    const int n = spec.params.value("n", 2);
    std::vector<double> a;
    if (spec.params.contains("a")) a = spec.params["a"].get<std::vector<double>>();
    b = skew_sphere_budget(skew_sphere_functions(n, a), rc.grid.value_or(0));
    params = {{"n", n}};
  } else {
    throw ConfigError("no perturbation budget for surface '" + spec.kind + "'");
  }
  std::cout << "family " << spec.kind << "  method " << b.method << '\n'
            << "  a " << b.a << "  C " << b.C << "  b " << b.b << "  eta " << b.eta << '\n'
            << "  eps_max " << b.eps_max << "  eps_cap " << b.eps_cap << "  eps_usable " << b.eps_usable << '\n';
  for (const auto& n : b.notes) std::cout << "  note: " << n << '\n';
  write_json(rc.out, {{"command", "eps-bound"}, {"family", spec.kind}, {"params", params}, {"budget", to_json(b)}});
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parallel tangent planes on codimension-2 immersions"};
  app.require_subcommand(1);

  std::string target;
  Flags verify_flags;
  auto* verify = app.add_subcommand("verify", "Check one explicit construction");
  verify->add_option("target", target, "Construction")
      ->required()
      ->check(CLI::IsMember(verify_targets()));
  verify_flags.add(verify, false);

  Flags pairs_flags;
  auto* pairs = app.add_subcommand("pairs", "Scan a surface for parallel tangent planes");
  pairs_flags.add(pairs, true);

  Flags dp_flags;
  auto* dps = app.add_subcommand("double-points", "Scan a surface for double points");
  dp_flags.add(dps, true);

  int p = 0, q = 0;
  std::string perm_out;
  auto* perm = app.add_subcommand("perm-sign", "Sign of the row-to-column transposition of a p×q matrix");
  perm->add_option("p", p)->required();
  perm->add_option("q", q)->required();
  perm->add_option("--out", perm_out, "Write the JSON report here");

  Flags eps_flags;
  auto* eps = app.add_subcommand("eps-bound", "Perturbation budget of a surface family");
  eps_flags.add(eps, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(target, verify_flags);
    if (*pairs) return cmd_pairs(pairs_flags, false);
    if (*dps) return cmd_pairs(dp_flags, true);
    if (*perm) return cmd_perm_sign(p, q, perm_out);
    if (*eps) return cmd_eps_bound(eps_flags);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const HypothesisViolation& e) {
    std::cerr << "hypothesis violated: " << e.what() << '\n';
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
