#include "skewbrane/report.hpp"

#include <cmath>
#include <limits>

namespace skewbrane {

using nlohmann::json;

namespace {

// JSON has no infinity; unbounded values are written as null.
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json sign_summary(const SignSummary& s) {
  return {{"pairs", s.pairs},
          {"min_defect", number(s.min_defect)},
          {"seeds", s.seeds},
          {"unresolved", s.unresolved},
          {"status", to_string(s.status)}};
}

}  // namespace

json to_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json to_json(const SearchConfig& c) {
  return {{"resolution", c.resolution},       {"tau_seed", c.tau_seed},
          {"tau_accept", c.tau_accept},       {"tau_reject", c.tau_reject},
          {"delta_diag", c.delta_diag},       {"delta_cluster", c.delta_cluster},
          {"max_iterations", c.max_iterations}, {"antipodal", c.antipodal},
          {"threads", c.threads}};
}

json to_json(const ParallelPair& p) {
  return {{"p", to_json(p.p)},
          {"q", to_json(p.q)},
          {"sign", to_string(p.sign)},
          {"defect", p.defect},
          {"iterations", p.iterations},
          {"cluster_size", p.cluster_size}};
}

json to_json(const SkewReport& r) {
  json pairs = json::array();
  for (const auto& p : r.pairs) pairs.push_back(to_json(p));
  return {{"surface", r.surface},
          {"resolution", r.resolution},
          {"grid_points", r.grid_points},
          {"pairs_scanned", r.pairs_scanned},
          {"antipodal", r.antipodal},
          {"positive", sign_summary(r.positive)},
          {"negative", sign_summary(r.negative)},
          {"status", to_string(r.status)},
          {"lipschitz", number(r.lipschitz)},
          {"spacing", number(r.spacing)},
          {"seeds_truncated", r.seeds_truncated},
          {"pairs", pairs}};
}

json to_json(const DoublePoint& d) {
  return {{"p", to_json(d.p)},         {"q", to_json(d.q)},           {"image", to_json(d.image)},
          {"residual", d.residual},    {"sign", d.sign},              {"margin", d.margin},
          {"transversal", d.transversal}};
}

json to_json(const DoublePointReport& r) {
  json pts = json::array();
  for (const auto& p : r.points) pts.push_back(to_json(p));
  return {{"surface", r.surface}, {"count", r.points.size()}, {"signed_count", r.signed_count},
          {"flagged", r.flagged}, {"points", pts}};
}

json to_json(const BoundCheck& b) {
  return {{"bound_kind", b.bound_kind}, {"chi", b.chi},   {"genus", b.genus},
          {"d", b.d},                   {"bound", b.bound}, {"negative_pairs", b.negative_pairs},
          {"pass", b.pass}};
}

json to_json(const EpsilonBudget& b) {
  return {{"a", number(b.a)},
          {"C", number(b.C)},
          {"b", number(b.b)},
          {"eta", number(b.eta)},
          {"eps_max", number(b.eps_max)},
          {"eps_cap", number(b.eps_cap)},
          {"eps_usable", number(b.eps_usable)},
          {"zero_locus_size", b.zero_locus_size},
          {"method", b.method},
          {"notes", b.notes}};
}

json to_json(const Grad5Report& g) {
  return {{"eps", g.eps},
          {"margin", number(g.margin)},
          {"worst_point", to_json(g.worst_point)},
          {"hopf_constant", g.hopf_constant},
          {"bound", g.bound},
          {"max_field_norm", g.max_field_norm},
          {"samples", g.samples},
          {"pass", g.pass}};
}

json to_json(const PermutationSign& s, int p, int q) {
  return {{"p", p},
          {"q", q},
          {"sign", s.sign},
          {"inversions", s.inversions},
          {"binomial_product", s.binomial_product},
          {"formula_sign", s.formula_parity == 0 ? 1 : -1},
          {"consistent", s.consistent()}};
}

}  // namespace skewbrane
