#include "skewbrane/surfaces.hpp"

#include "skewbrane/errors.hpp"
#include "skewbrane/immersed_sphere.hpp"
#include "skewbrane/skew_torus.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>

namespace skewbrane {

using nlohmann::json;

namespace {

const std::map<std::string, std::set<std::string>>& allowed_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"torus0", {}},
      {"skew-torus", {"eps", "delta"}},
      {"sphere-m0", {"eps", "harmonics"}},
      {"skew-imm-sphere", {"eps", "harmonics"}},
      {"skew-sphere3", {"eps", "n", "a"}},
      {"graph-sphere", {"amplitude", "terms", "seed"}},
  };
  return keys;
}

double get_number(const json& p, const std::string& key, double fallback) {
  if (!p.contains(key)) return fallback;
  if (!p[key].is_number()) throw ConfigError("parameter '" + key + "' must be a number");
  return p[key].get<double>();
}

long get_integer(const json& p, const std::string& key, long fallback) {
  if (!p.contains(key)) return fallback;
  if (!p[key].is_number_integer()) throw ConfigError("parameter '" + key + "' must be an integer");
  return p[key].get<long>();
}

GProfile parse_harmonics(const json& p) {
  if (!p.contains("harmonics")) return GProfile::standard();
  const json& h = p["harmonics"];
  if (!h.is_array()) throw ConfigError("parameter 'harmonics' must be an array");
  std::vector<Harmonic> terms;
  for (const auto& t : h) {
    if (!t.is_object()) throw ConfigError("each harmonic must be an object {k, sin, cos}");
    for (const auto& [key, _] : t.items()) {
      if (key != "k" && key != "sin" && key != "cos") throw ConfigError("unknown harmonic field '" + key + "'");
    }
    if (!t.contains("k") || !t["k"].is_number_integer()) throw ConfigError("harmonic needs an integer 'k'");
    terms.push_back({t["k"].get<int>(), get_number(t, "sin", 0.0), get_number(t, "cos", 0.0)});
  }
  return GProfile(std::move(terms));
}

json harmonics_json(const GProfile& g) {
  json out = json::array();
  for (const auto& t : g.terms()) out.push_back({{"k", t.k}, {"sin", t.s}, {"cos", t.c}});
  return out;
}

}  // namespace

double unit_double(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

SurfaceSpec SurfaceSpec::from_json(const json& j) {
  SurfaceSpec s;
  if (j.is_string()) {
    s.kind = j.get<std::string>();
    return s;
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw ConfigError("surface spec must be a name or an object with a string 'kind'");
  }
  for (const auto& [key, _] : j.items()) {
    if (key != "kind" && key != "params") throw ConfigError("unknown surface spec field '" + key + "'");
  }
  s.kind = j["kind"].get<std::string>();
  if (j.contains("params")) {
    if (!j["params"].is_object()) throw ConfigError("surface 'params' must be an object");
    s.params = j["params"];
  }
  return s;
}

json SurfaceSpec::to_json() const { return {{"kind", kind}, {"params", params}}; }

std::vector<std::string> surface_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : allowed_keys()) out.push_back(name);
  return out;
}

void validate_surface_spec(const SurfaceSpec& spec) {
  const auto it = allowed_keys().find(spec.kind);
  if (it == allowed_keys().end()) throw ConfigError("unknown surface '" + spec.kind + "'");
  if (!spec.params.is_object()) throw ConfigError("surface params must be an object");
  for (const auto& [key, _] : spec.params.items()) {
    if (!it->second.count(key)) {
      throw ConfigError("unknown parameter '" + key + "' for surface '" + spec.kind + "'");
    }
  }
  const json& p = spec.params;
  for (const char* key : {"eps", "delta", "amplitude"}) get_number(p, key, 0.0);
  for (const char* key : {"n", "terms", "seed"}) get_integer(p, key, 0);
  if (p.contains("a")) {
    if (!p["a"].is_array()) throw ConfigError("parameter 'a' must be an array of numbers");
    for (const auto& v : p["a"]) {
      if (!v.is_number()) throw ConfigError("parameter 'a' must be an array of numbers");
    }
  }
  parse_harmonics(p);
}

Immersion build_graph_sphere(double amplitude, int terms, std::uint64_t seed) {
  if (terms < 1) throw ContractError("graph sphere: terms must be positive");
  std::mt19937_64 rng(seed);
  struct Wave {
    Eigen::Vector3d k;
    double c, phase;
  };
  std::vector<Wave> waves;
  while (static_cast<int>(waves.size()) < terms) {
    Eigen::Vector3d k;
    for (int i = 0; i < 3; ++i) k(i) = static_cast<double>(static_cast<int>(rng() % 5) - 2);
    const double c = 2.0 * unit_double(rng) - 1.0;
    const double phase = 2.0 * std::numbers::pi * unit_double(rng);
    if (k.isZero()) continue;
    waves.push_back({k, c, phase});
  }
  auto map = [waves, amplitude](const Eigen::VectorXd& x) {
    double w = 0.0;
    for (const auto& wv : waves) w += wv.c * std::sin(wv.k.dot(x.head<3>()) + wv.phase);
    Eigen::VectorXd out(4);
    out << x(0), x(1), x(2), amplitude * w;
    return out;
  };
  auto jac = [waves, amplitude](const Eigen::VectorXd& x) {
    Eigen::Vector3d grad = Eigen::Vector3d::Zero();
    for (const auto& wv : waves) grad += wv.c * std::cos(wv.k.dot(x.head<3>()) + wv.phase) * wv.k;
    Eigen::MatrixXd j(4, 3);
    j.topRows(3).setIdentity();
    j.row(3) = amplitude * grad.transpose();
    return j;
  };
  return Immersion("graph-sphere", ParamDomain::sphere(3), 4, map, jac, {},
                   {{"amplitude", amplitude}, {"terms", terms}, {"seed", static_cast<double>(seed)}});
}

BuiltSurface build_surface(const SurfaceSpec& spec) {
  validate_surface_spec(spec);
  const json& p = spec.params;
  const std::string& kind = spec.kind;

  if (kind == "torus0") return {build_torus0(), json::object(), std::nullopt, std::nullopt};

  if (kind == "skew-torus") {
    const double delta = get_number(p, "delta", 0.1);
    double eps = get_number(p, "eps", -1.0);
    if (!p.contains("eps")) {
      eps = 0.5 * torus_epsilon_budget(skew_torus_functions(delta)).eps_usable;
    }
    SkewTorus t = build_skew_torus(eps, delta);
    return {t.surface, {{"eps", eps}, {"delta", delta}}, t.budget, std::nullopt};
  }

  if (kind == "sphere-m0" || kind == "skew-imm-sphere") {
    const double eps = get_number(p, "eps", kind == "sphere-m0" ? 0.0 : 0.02);
    const GProfile g = parse_harmonics(p);
    Immersion s = build_immersed_sphere(eps, g);
    return {s, {{"eps", eps}, {"harmonics", harmonics_json(g)}}, std::nullopt, std::nullopt};
  }

  if (kind == "skew-sphere3") {
    const double eps = get_number(p, "eps", 0.01);
    const int n = static_cast<int>(get_integer(p, "n", 2));
    std::vector<double> a;
    if (p.contains("a")) a = p["a"].get<std::vector<double>>();
    SkewSphere s = build_skew_sphere(n, eps, a);
    Immersion surface = s.section.immersion({{"eps", eps}, {"n", n}});
    json resolved = {{"eps", eps}, {"n", n}, {"a", s.functions.a}};
    EpsilonBudget budget = s.budget;
    return {std::move(surface), std::move(resolved), std::move(budget), std::move(s)};
  }

  // graph-sphere
  const double amplitude = get_number(p, "amplitude", 0.1);
  const long terms = get_integer(p, "terms", 6);
  const long seed = get_integer(p, "seed", 1);
  if (seed < 0) throw ConfigError("parameter 'seed' must be nonnegative");
  return {build_graph_sphere(amplitude, static_cast<int>(terms), static_cast<std::uint64_t>(seed)),
          {{"amplitude", amplitude}, {"terms", terms}, {"seed", seed}},
          std::nullopt,
          std::nullopt};
}

}  // namespace skewbrane
