#include "skewbrane/verify.hpp"

#include "skewbrane/errors.hpp"
#include "skewbrane/hopf.hpp"
#include "skewbrane/immersed_sphere.hpp"
#include "skewbrane/parity.hpp"
#include "skewbrane/report.hpp"
#include "skewbrane/search.hpp"
#include "skewbrane/skew_torus.hpp"
#include "skewbrane/surfaces.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace skewbrane {

using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

SubCheck below(const std::string& name, double value, double limit) {
  return {name, value, "< " + fmt(limit), value < limit};
}

SubCheck above(const std::string& name, double value, double limit) {
  return {name, value, "> " + fmt(limit), value > limit};
}

SubCheck equals(const std::string& name, double value, double target) {
  return {name, value, "= " + fmt(target), value == target};
}

SubCheck near(const std::string& name, double value, double target, double tol) {
  return {name, value, fmt(target) + " ± " + fmt(tol), std::abs(value - target) <= tol};
}

SearchConfig scan_config(const VerifyOptions& opt, int default_resolution) {
  SearchConfig cfg;
  cfg.resolution = opt.resolution > 0 ? opt.resolution : default_resolution;
  cfg.threads = std::max(1, opt.threads);
  return cfg;
}

// Negative clusters of M₀ sit at h = ±1/√5 with 2α₂ − 2α₁ ≡ π.
void verify_m0(const VerifyOptions& opt, VerifyResult& out) {
  const Immersion m0 = build_m0();
  const SearchConfig cfg = scan_config(opt, 64);
  const SkewReport rep = scan_pairs(m0, cfg);
  const double h0 = 1.0 / std::sqrt(5.0);
  double err_h1 = 0.0, err_h2 = 0.0, err_angle = 0.0;
  int negatives = 0;
  for (const auto& pr : rep.pairs) {
    if (pr.sign != SignClass::kNegative) continue;
    ++negatives;
    Eigen::VectorXd a = pr.p, b = pr.q;
    if (a(1) < b(1)) std::swap(a, b);
    err_h1 = std::max(err_h1, std::abs(a(1) - h0));
    err_h2 = std::max(err_h2, std::abs(b(1) + h0));
    err_angle = std::max(err_angle, std::abs(std::remainder(2.0 * b(0) - 2.0 * a(0) - kPi, 2.0 * kPi)));
  }
  out.checks.push_back(above("negative_clusters", negatives, 0));
  out.checks.push_back(below("max_abs_h1_minus_inv_sqrt5", err_h1, 1e-6));
  out.checks.push_back(below("max_abs_h2_plus_inv_sqrt5", err_h2, 1e-6));
  out.checks.push_back(below("max_abs_angle_relation", err_angle, 1e-6));

  const DoublePointReport dp = find_double_points(m0, cfg);
  double margin = dp.points.empty() ? 0.0 : dp.points.front().margin;
  for (const auto& d : dp.points) margin = std::min(margin, d.margin);
  out.checks.push_back(equals("double_points", static_cast<double>(dp.points.size()), 1));
  out.checks.push_back(above("transversality_margin", margin, 0.5));
  out.checks.push_back(equals("abs_signed_count", std::abs(dp.signed_count), 1));
  const BoundCheck bound = bound_check(rep, 2, 0, dp.signed_count, false);
  out.checks.push_back(equals("immersed_bound", bound.bound, 0));

  out.details["scan"] = to_json(rep);
  out.details["double_points"] = to_json(dp);
  out.details["bound"] = to_json(bound);
}

// (f_β)² + (g_α)² = 4 for both the (0,0) and the (1,0) parts of the torus
// functions.
double max_identity_error(std::uint64_t seed) {
  const TorusFunctions parts[2] = {
      skew_torus_functions(0.0),
      {TrigSeries({{1, 2, 1.0, 0.0}}), TrigSeries({{1, 2, 0.0, 2.0}})},
  };
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double a = 2.0 * kPi * unit_double(rng);
    const double b = 2.0 * kPi * unit_double(rng);
    for (const auto& fg : parts) worst = std::max(worst, std::abs(torus_identity(fg, a, b) - 4.0));
  }
  return worst;
}

void verify_skew_torus(const VerifyOptions& opt, VerifyResult& out) {
  constexpr double kDelta = 0.1;
  out.checks.push_back(below("identity_max_abs_error", max_identity_error(opt.seed), 1e-12));

  const EpsilonBudget budget = torus_epsilon_budget(skew_torus_functions(kDelta));
  out.checks.push_back(above("eps_max", budget.eps_max, 0.0));
  const double eps = 0.5 * budget.eps_usable;
  const SkewTorus torus = build_skew_torus(eps, kDelta);
  const SkewReport rep = scan_pairs(torus.surface, scan_config(opt, 32));
  out.checks.push_back(equals("positive_pairs", rep.positive.pairs, 0));
  out.checks.push_back(equals("negative_pairs", rep.negative.pairs, 0));
  out.checks.push_back(above("min_positive_defect", rep.positive.min_defect, 1e-4));
  out.checks.push_back(above("min_negative_defect", rep.negative.min_defect, 1e-4));

  out.details["eps"] = eps;
  out.details["delta"] = kDelta;
  out.details["budget"] = to_json(budget);
  out.details["scan"] = to_json(rep);
}

// Parallel partners of T₀² are exactly the three ℤ₂² images of the base point.
void verify_torus0_orbits(const VerifyOptions& opt, VerifyResult& out) {
  const Immersion t0 = build_torus0();
  const SearchConfig cfg = scan_config(opt, 32);
  std::mt19937_64 rng(opt.seed);
  int complete = 0;
  double worst_offset = 0.0;
  std::array<int, 4> negative_hits{}, positive_hits{};
  json bad = json::array();
  constexpr int kBases = 100;
  for (int i = 0; i < kBases; ++i) {
    Eigen::Vector2d p(2.0 * kPi * unit_double(rng), 2.0 * kPi * unit_double(rng));
    const auto partners = scan_partners(t0, p, cfg);
    int neg = 0, pos = 0;
    std::array<bool, 4> seen{};
    bool matched = true;
    for (const auto& pr : partners) {
      int best = 0;
      double best_d = 1e300;
      for (int e = 1; e <= 3; ++e) {
        const double d = t0.domain().distance(pr.q, torus_action(e, p));
        if (d < best_d) best_d = d, best = e;
      }
      worst_offset = std::max(worst_offset, best_d);
      if (best_d > 1e-6 || seen[best]) matched = false;
      seen[best] = true;
      if (pr.sign == SignClass::kNegative) ++neg, ++negative_hits[best];
      else ++pos, ++positive_hits[best];
    }
    if (matched && partners.size() == 3 && neg == 2 && pos == 1) {
      ++complete;
    } else {
      bad.push_back({{"p", to_json(Eigen::VectorXd(p))}, {"negative", neg}, {"positive", pos}});
    }
  }
  out.checks.push_back(equals("bases_with_three_orbit_partners_2neg_1pos", complete, kBases));
  out.checks.push_back(below("max_partner_offset_from_orbit", worst_offset, 1e-6));
  const char* names[4] = {"id", "S1", "S2", "S1S2"};
  json classes = json::object();
  for (int e = 1; e <= 3; ++e) classes[names[e]] = {{"negative", negative_hits[e]}, {"positive", positive_hits[e]}};
  out.details["bases"] = kBases;
  out.details["partner_classes"] = classes;
  out.details["failures"] = bad;
}

void verify_skew_sphere3(const VerifyOptions& opt, VerifyResult& out) {
  constexpr double kEps = 0.01;
  const SkewSphere sphere = build_skew_sphere(2, kEps);
  const HopfIdentityCheck hopf = hopf_identity_check(sphere.functions, 1000);
  out.checks.push_back(equals("critical_circles", static_cast<double>(hopf.circle_min.size()), 2));
  out.checks.push_back(below("hopf_identity_max_deviation", hopf.max_deviation, 1e-8));

  const Grad5Report g5 = grad5_margin(sphere.functions.g, sphere.functions.f_ev, sphere.functions.f_odd, kEps,
                                      opt.grad5_resolution, 2.0, std::max(1, opt.threads));
  out.checks.push_back(above("grad5_samples", static_cast<double>(g5.samples), std::pow(50.0, 4) - 1));
  out.checks.push_back(above("grad5_margin", g5.margin, kEps));

  SearchConfig cfg = scan_config(opt, 16);
  cfg.antipodal = true;
  const SkewReport rep = antipodal_scan(sphere.section.immersion(), cfg);
  out.checks.push_back({"antipodal_status", rep.negative.min_defect, "heuristically-skew",
                        rep.status == CertificateStatus::kHeuristicallySkew});

  out.details["eps"] = kEps;
  out.details["budget"] = to_json(sphere.budget);
  out.details["hopf_circle_min"] = hopf.circle_min;
  out.details["hopf_circle_max"] = hopf.circle_max;
  out.details["grad5"] = to_json(g5);
  out.details["antipodal_scan"] = to_json(rep);
}

void verify_imm_sphere2(const VerifyOptions& opt, VerifyResult& out) {
  constexpr double kEps = 0.02;
  const GProfile g = GProfile::standard();
  const SkewReport rep = scan_pairs(build_immersed_sphere(kEps, g), scan_config(opt, 64));
  out.checks.push_back(equals("negative_pairs", rep.negative.pairs, 0));
  out.checks.push_back(above("min_negative_defect", rep.negative.min_defect, 1e-4));
  const ImmersedSphereResidual lin = immersed_sphere_linearized_residual(g, 200000);
  out.checks.push_back(near("linearized_min_max_residual", lin.min_max, 1.295, 0.01));

  out.details["eps"] = kEps;
  out.details["scan"] = to_json(rep);
  out.details["linearized"] = {{"min_max", lin.min_max},
                               {"alpha", lin.argmin_alpha},
                               {"beta", lin.argmin_beta},
                               {"resolution", lin.resolution}};
}

}  // namespace

bool VerifyResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const SubCheck& c) { return c.pass; });
}

std::vector<std::string> VerifyResult::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.pass) out.push_back(c.name);
  }
  return out;
}

std::vector<std::string> verify_targets() {
  return {"skew-torus", "skew-sphere3", "imm-sphere2", "torus0-orbits", "m0-family"};
}

VerifyResult run_verify(const std::string& target, const VerifyOptions& opt) {
  VerifyResult out;
  out.target = target;
  const auto start = std::chrono::steady_clock::now();
  if (target == "m0-family") verify_m0(opt, out);
  else if (target == "skew-torus") verify_skew_torus(opt, out);
  else if (target == "torus0-orbits") verify_torus0_orbits(opt, out);
  else if (target == "skew-sphere3") verify_skew_sphere3(opt, out);
  else if (target == "imm-sphere2") verify_imm_sphere2(opt, out);
  else throw ConfigError("unknown verify target '" + target + "'");
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

json to_json(const SubCheck& c) {
  json v = std::isfinite(c.value) ? json(c.value) : json(nullptr);
  return {{"name", c.name}, {"value", v}, {"expected", c.expected}, {"pass", c.pass}};
}

json to_json(const VerifyResult& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"target", r.target},
          {"pass", r.pass()},
          {"failures", r.failures()},
          {"checks", checks},
          {"details", r.details}};
}

}  // namespace skewbrane
