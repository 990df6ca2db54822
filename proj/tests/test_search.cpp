#include "skewbrane/errors.hpp"
#include "skewbrane/grassmann.hpp"
#include "skewbrane/hopf.hpp"
#include "skewbrane/immersed_sphere.hpp"
#include "skewbrane/parity.hpp"
#include "skewbrane/report.hpp"
#include "skewbrane/search.hpp"
#include "skewbrane/skew_torus.hpp"
#include "skewbrane/surfaces.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

using namespace skewbrane;
using skewbrane::test::Uniform;

namespace {

constexpr double kPi = std::numbers::pi;

SearchConfig config(int resolution) {
  SearchConfig c;
  c.resolution = resolution;
  return c;
}

double defect_at(const Immersion& s, const ParallelPair& p) {
  const DefectValue d = parallel_defect(gauss_plane(s, p.p), gauss_plane(s, p.q));
  return p.sign == SignClass::kPositive ? d.positive : d.negative;
}

void check_report_invariants(const SkewReport& r, const SearchConfig& cfg) {
  for (SignClass s : {SignClass::kPositive, SignClass::kNegative}) {
    const SignSummary& m = r.summary(s);
    if (m.status == CertificateStatus::kHeuristicallySkew) CHECK(m.min_defect > cfg.tau_reject);
    if (m.status == CertificateStatus::kPairsFound) CHECK(m.pairs >= 1);
  }
}

}  // namespace

TEST_CASE("SearchConfig validation") {
  SearchConfig c;
  CHECK_NOTHROW(c.validate());
  c.tau_accept = 1e-3;
  c.tau_reject = 1e-4;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = SearchConfig{};
  c.tau_reject = 0.5;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = SearchConfig{};
  c.delta_cluster = 0.4;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = SearchConfig{};
  c.resolution = 1;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = SearchConfig{};
  c.threads = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("canonicalize and pair_distance") {
  Eigen::VectorXd p = Eigen::Vector2d(2.0, 1.0), q = Eigen::Vector2d(1.0, 3.0);
  canonicalize(p, q);
  CHECK(p(0) == 1.0);
  CHECK(q(0) == 2.0);
  const ParamDomain t = ParamDomain::torus(2);
  const Eigen::VectorXd a = Eigen::Vector2d(0.1, 0.2), b = Eigen::Vector2d(3.0, 1.0);
  CHECK(pair_distance(t, a, b, b, a) < 1e-15);
  CHECK(pair_distance(t, a, b, a, b) == 0.0);
  const Eigen::VectorXd c = Eigen::Vector2d(0.3, 0.2);
  CHECK(pair_distance(t, a, b, c, b) == doctest::Approx(pair_distance(t, c, b, a, b)));
}

TEST_CASE("T0^2: orbit partners and completeness") {
  const Immersion t0 = build_torus0();
  const SearchConfig cfg = config(32);
  const SkewReport r = scan_pairs(t0, cfg);
  CHECK(r.negative.pairs == 1024);
  CHECK(r.positive.pairs == 512);
  CHECK(r.status == CertificateStatus::kPairsFound);
  check_report_invariants(r, cfg);
  for (const auto& pr : r.pairs) {
    CHECK(defect_at(t0, pr) < cfg.tau_accept);
    const Eigen::Vector2d d(wrap_angle(pr.q(0) - pr.p(0)), wrap_angle(pr.q(1) - pr.p(1)));
    const bool s1 = std::abs(d(0) - kPi) < 1e-6 && std::min(d(1), 2 * kPi - d(1)) < 1e-6;
    const bool s2 = std::min(d(0), 2 * kPi - d(0)) < 1e-6 && std::abs(d(1) - kPi) < 1e-6;
    const bool s12 = std::abs(d(0) - kPi) < 1e-6 && std::abs(d(1) - kPi) < 1e-6;
    CHECK((s1 || s2 || s12));
    CHECK((pr.sign == SignClass::kPositive) == s12);
    Eigen::VectorXd p = pr.p, q = pr.q;
    canonicalize(p, q);
    CHECK((p - pr.p).norm() == 0.0);
    CHECK(t0.domain().distance(pr.p, pr.q) >= cfg.delta_diag);
  }
}

TEST_CASE("T0^2: three partners per point at grid 48") {
  const Immersion t0 = build_torus0();
  Uniform u(41);
  for (int i = 0; i < 20; ++i) {
    const Eigen::VectorXd p = Eigen::Vector2d(u.in(0, 2 * kPi), u.in(0, 2 * kPi));
    const auto partners = scan_partners(t0, p, config(48));
    REQUIRE(partners.size() == 3);
    int negative = 0;
    for (const auto& pr : partners) {
      negative += pr.sign == SignClass::kNegative;
      double best = 1e300;
      for (int e = 1; e <= 3; ++e) best = std::min(best, t0.domain().distance(pr.q, torus_action(e, Eigen::Vector2d(p))));
      CHECK(best < 1e-6);
    }
    CHECK(negative == 2);
  }
}

TEST_CASE("M0: negative family at h = ±1/√5") {
  const Immersion m0 = build_m0();
  const SearchConfig cfg = config(32);
  const SkewReport r = scan_pairs(m0, cfg);
  CHECK(r.negative.pairs > 0);
  const double h0 = 1.0 / std::sqrt(5.0);
  for (const auto& pr : r.pairs) {
    CHECK(defect_at(m0, pr) < cfg.tau_accept);
    if (pr.sign != SignClass::kNegative) continue;
    const double hi = std::max(pr.p(1), pr.q(1)), lo = std::min(pr.p(1), pr.q(1));
    CHECK(std::abs(hi - h0) < 1e-6);
    CHECK(std::abs(lo + h0) < 1e-6);
    const Eigen::VectorXd& top = pr.p(1) > pr.q(1) ? pr.p : pr.q;
    const Eigen::VectorXd& bottom = pr.p(1) > pr.q(1) ? pr.q : pr.p;
    CHECK(std::abs(std::remainder(2 * bottom(0) - 2 * top(0) - kPi, 2 * kPi)) < 1e-6);
  }
}

TEST_CASE("cluster counts do not drop when the grid is doubled") {
  const Immersion t0 = build_torus0(), m0 = build_m0();
  const SkewReport t16 = scan_pairs(t0, config(16)), t32 = scan_pairs(t0, config(32));
  CHECK(t32.pairs.size() >= t16.pairs.size());
  const SkewReport m32 = scan_pairs(m0, config(32)), m64 = scan_pairs(m0, config(64));
  CHECK(m64.negative.pairs >= m32.negative.pairs);
  CHECK(m64.positive.pairs >= m32.positive.pairs);
}

TEST_CASE("reports are deterministic and independent of the thread count") {
  const Immersion m0 = build_m0();
  SearchConfig a = config(24), b = config(24);
  b.threads = 3;
  const nlohmann::json ja = to_json(scan_pairs(m0, a)), jb = to_json(scan_pairs(m0, b));
  CHECK(ja.dump() == jb.dump());
  CHECK(ja.dump() == to_json(scan_pairs(m0, a)).dump());
}

TEST_CASE("skew torus is heuristically skew") {
  const EpsilonBudget b = torus_epsilon_budget(skew_torus_functions(0.1));
  const SkewTorus t = build_skew_torus(0.5 * b.eps_usable, 0.1);
  const SearchConfig cfg = config(32);
  const SkewReport r = scan_pairs(t.surface, cfg);
  CHECK(r.status == CertificateStatus::kHeuristicallySkew);
  CHECK(r.positive.min_defect > cfg.tau_reject);
  CHECK(r.negative.min_defect > cfg.tau_reject);
  CHECK(r.lipschitz > 0.0);
  CHECK(r.spacing > 0.0);
  check_report_invariants(r, cfg);
}

TEST_CASE("antipodal scans") {
  // Odd resolution: face centres such as (1,0,0,0) lie on the critical
  // circles and are grid points. Even grids miss the circles by half a cell.
  SearchConfig cfg = config(13);
  CHECK_THROWS_AS(antipodal_scan(build_skew_sphere(2, 0.01).section.immersion(), cfg), ConfigError);
  cfg.antipodal = true;

  const SkewReport skew = antipodal_scan(build_skew_sphere(2, 0.01).section.immersion(), cfg);
  CHECK(skew.status == CertificateStatus::kHeuristicallySkew);
  CHECK(skew.negative.min_defect > 1e-3);
  check_report_invariants(skew, cfg);

  // ε = 0: h ≡ 1 and f = f_ev + f_odd with f_odd supported near the circles;
  // parallel pairs sit where the residual −2(f_ev)_x + 2(f_odd)_x-terms vanish,
  // in particular on the critical circles of f_ev.
  const SkewReport flat = antipodal_scan(build_skew_sphere(2, 0.0).section.immersion(), cfg);
  CHECK(flat.status == CertificateStatus::kPairsFound);

  const SkewSphereFunctions fns = skew_sphere_functions(2);
  const CylinderSection even(SupportSurface::round(4), fns.f_ev, "even");
  const SkewReport r = antipodal_scan(even.immersion(), cfg);
  CHECK(r.status == CertificateStatus::kPairsFound);
  for (const auto& pr : r.pairs) {
    const double z1 = std::hypot(pr.p(0), pr.p(1)), z2 = std::hypot(pr.p(2), pr.p(3));
    CHECK(std::min(std::abs(z1 - 1.0), std::abs(z2 - 1.0)) < 1e-6);
    CHECK((pr.p + pr.q).norm() < 1e-12);
  }
}

TEST_CASE("double points") {
  const SearchConfig cfg = config(32);
  const DoublePointReport m0 = find_double_points(build_m0(), cfg);
  REQUIRE(m0.points.size() == 1);
  const DoublePoint& d = m0.points.front();
  CHECK(d.image.norm() < 1e-10);
  CHECK(std::abs(std::abs(d.p(1)) - 1.0) < 1e-12);
  CHECK(d.p(1) == -d.q(1));
  CHECK(d.margin > 0.5);
  CHECK(std::abs(m0.signed_count) == 1);
  CHECK(d.transversal);

  CHECK(find_double_points(build_torus0(), cfg).points.empty());
  CHECK(find_double_points(build_graph_sphere(0.1, 6, 1), config(16)).points.empty());
}

TEST_CASE("bound_check") {
  const Immersion graph = build_graph_sphere(0.1, 6, 1);
  const BoundCheck embedded = bound_check(scan_pairs(graph, config(16)), 2, 0, 0, true);
  CHECK(embedded.bound == 1.0);
  CHECK(embedded.negative_pairs >= 1);
  CHECK(embedded.pass);

  const SkewReport m0 = scan_pairs(build_m0(), config(16));
  const BoundCheck immersed = bound_check(m0, 2, 0, -1, false);
  CHECK(immersed.bound == 0.0);
  CHECK(immersed.pass);

  const BoundCheck torus = bound_check(scan_pairs(build_torus0(), config(16)), 0, 1, 0, true);
  CHECK(torus.bound == 0.0);
  CHECK(torus.pass);
}

TEST_CASE("defect CSV dump") {
  std::ostringstream out;
  write_defect_csv(build_torus0(), 8, out);
  const std::string s = out.str();
  CHECK(s.rfind("p_index,q_index,p0,p1,q0,q1,positive_defect,negative_defect\r\n", 0) == 0);
  long rows = 0;
  for (size_t pos = 0; (pos = s.find("\r\n", pos)) != std::string::npos; pos += 2) ++rows;
  CHECK(rows == 1 + 64 * 8);
}
