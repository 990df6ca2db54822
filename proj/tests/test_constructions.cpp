#include "skewbrane/budget.hpp"
#include "skewbrane/errors.hpp"
#include "skewbrane/hopf.hpp"
#include "skewbrane/immersed_sphere.hpp"
#include "skewbrane/parity.hpp"
#include "skewbrane/search.hpp"
#include "skewbrane/skew_torus.hpp"
#include "skewbrane/support.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

using namespace skewbrane;
using skewbrane::test::Uniform;

namespace {

constexpr double kPi = std::numbers::pi;

SphereFunction cubic_odd(int m) {
  return SphereFunction::homogeneous(m, 1, [](auto u) { return u[0] * u[0] * u[0] + u[1] * u[0] * u[u.size() - 1]; });
}

Eigen::MatrixXd tangent_projector(const Eigen::VectorXd& x) {
  return Eigen::MatrixXd::Identity(x.size(), x.size()) - x * x.transpose();
}

std::vector<SupportSurface> support_surfaces() {
  const Eigen::Vector3d v(0.2, -0.1, 0.3);
  SupportSurface translated("translated", SphereFunction::homogeneous(3, 1, [v](auto u) {
                              return 1.0 + u[0] * v(0) + u[1] * v(1) + u[2] * v(2);
                            }));
  const SkewSphereFunctions s3 = skew_sphere_functions(2);
  return {SupportSurface::round(3), SupportSurface::round(4), translated,
          SupportSurface::perturbed(3, cubic_odd(3), 0.05), SupportSurface::perturbed(4, s3.g, 0.01)};
}

}  // namespace

TEST_CASE("Euler relations for support functions") {
  Uniform u(21);
  for (const auto& s : support_surfaces()) {
    for (int i = 0; i < 1000; ++i) {
      const Eigen::VectorXd x = u.unit(s.ambient());
      INFO(s.name());
      CHECK(std::abs(x.dot(s.grad(x)) - s.value(x)) < 1e-8);
      CHECK((s.hess(x) * x).norm() < 1e-8);
    }
  }
}

TEST_CASE("support_parameterize") {
  Uniform u(22);
  const auto surfaces = support_surfaces();
  for (int i = 0; i < 100; ++i) {
    const Eigen::VectorXd x = u.unit(3);
    CHECK((support_parameterize(surfaces[0], x) - x).norm() < 1e-14);
    CHECK((support_parameterize(surfaces[2], x) - (x + Eigen::Vector3d(0.2, -0.1, 0.3))).norm() < 1e-14);
  }
  const SupportSurface p = SupportSurface::perturbed(4, skew_sphere_functions(2).g, 0.01);
  double worst = 0.0;
  for (const auto& x : ParamDomain::sphere(4).grid(10).points) {
    worst = std::max(worst, (support_parameterize(p, x) - x).norm());
  }
  CHECK(worst < 0.05);
  CHECK_THROWS_AS(support_parameterize(p, Eigen::Vector4d(1, 1, 0, 0)), ContractError);
}

TEST_CASE("tangent hyperplane at y = h_x(x) is orthogonal to x") {
  Uniform u(23);
  for (const auto& s : support_surfaces()) {
    for (int i = 0; i < 200; ++i) {
      const Eigen::VectorXd x = u.unit(s.ambient());
      const Eigen::VectorXd v = tangent_projector(x) * u.vec(s.ambient());
      const double t = 1e-6;
      const Eigen::VectorXd dy = (s.grad(x + t * v) - s.grad(x - t * v)) / (2 * t);
      CHECK(std::abs(x.dot(dy)) < 1e-6);
    }
  }
}

TEST_CASE("operator_A") {
  Uniform u(24);
  for (int i = 0; i < 50; ++i) {
    const Eigen::VectorXd x = u.unit(3);
    const Eigen::MatrixXd a = operator_A(SupportSurface::round(3), x);
    CHECK((a - tangent_projector(x)).norm() < 1e-12);
    CHECK((a * x).norm() < 1e-12);
  }
  const double eps = 1e-3;
  const SphereFunction g = cubic_odd(3);
  const SupportSurface p = SupportSurface::perturbed(3, g, eps);
  for (int i = 0; i < 50; ++i) {
    const Eigen::VectorXd x = u.unit(3);
    const Eigen::MatrixXd P = tangent_projector(x);
    const Eigen::MatrixXd first_order = P - eps * P * g.jet(x).hess * P;
    CHECK((operator_A(p, x) - first_order).norm() < 1e-5);
    CHECK((operator_A(p, x) * x).norm() < 1e-12);
  }
  const SupportSurface dented = SupportSurface::perturbed(
      3, SphereFunction::homogeneous(3, 0, [](auto u) { return -5.0 * u[0] * u[0]; }), 1.0);
  CHECK_THROWS_AS(operator_A(dented, Eigen::Vector3d(0, 1, 0)), ConvexityLossError);
}

TEST_CASE("cylinder section is the graph of f over y = h_x") {
  Uniform u(25);
  const SkewSphere s = build_skew_sphere(2, 0.01);
  for (int i = 0; i < 100; ++i) {
    const Eigen::VectorXd x = u.unit(4);
    const Eigen::VectorXd pt = s.section.point(x);
    CHECK((pt.head(4) - s.section.base().grad(x)).norm() < 1e-14);
    CHECK(pt(4) == doctest::Approx(s.section.f()(x)));
    const Eigen::MatrixXd j = s.section.jacobian(x);
    CHECK(j.rows() == 5);
    CHECK((x.transpose() * j.topRows(4)).norm() < 1e-8);
  }
}

TEST_CASE("parity decomposition on the torus") {
  const ParamDomain t = ParamDomain::torus(2);
  auto part_norm = [&](const ParityParts& pp, int i, int j) {
    double m = 0.0;
    for (const auto& p : t.grid(12).points) m = std::max(m, std::abs(pp.part[i][j](p)));
    return m;
  };
  const ParityParts a = parity_decompose([](const Eigen::VectorXd& p) { return std::cos(2 * p(0) + 2 * p(1)); }, t);
  CHECK(part_norm(a, 1, 0) + part_norm(a, 0, 1) + part_norm(a, 1, 1) < 1e-12);
  const ParityParts b = parity_decompose([](const Eigen::VectorXd& p) { return std::cos(p(0) + 2 * p(1)); }, t);
  CHECK(part_norm(b, 0, 0) + part_norm(b, 0, 1) + part_norm(b, 1, 1) < 1e-12);

  Uniform u(26);
  const ScalarField f = [](const Eigen::VectorXd& p) {
    return std::sin(p(0)) * std::cos(3 * p(1)) + std::exp(std::cos(p(0) - p(1))) + std::sin(2 * p(1));
  };
  const ParityParts pp = parity_decompose(f, t);
  for (int k = 0; k < 500; ++k) {
    const Eigen::Vector2d p(u.in(0, 2 * kPi), u.in(0, 2 * kPi));
    CHECK(std::abs(pp.sum(p) - f(p)) < 1e-12);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        const double v = pp.part[i][j](p);
        CHECK(std::abs(pp.part[i][j](torus_action(1, p)) - (i ? -v : v)) < 1e-12);
        CHECK(std::abs(pp.part[i][j](torus_action(2, p)) - (j ? -v : v)) < 1e-12);
      }
    }
  }
}

TEST_CASE("parity decomposition on spheres") {
  const ParamDomain s1 = ParamDomain::sphere(2);
  const ParityParts pp = parity_decompose([](const Eigen::VectorXd& x) { return 1.0 + x(1); }, s1);
  Uniform u(27);
  for (int k = 0; k < 100; ++k) {
    const double a = u.in(0, 2 * kPi);
    const Eigen::Vector2d x(std::cos(a), std::sin(a));
    CHECK(pp.even(x) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(pp.odd(x) == doctest::Approx(std::sin(a)).epsilon(1e-14));
  }
  const ScalarField f = [](const Eigen::VectorXd& x) { return std::exp(x(0)) * (1 + x(2)) + x(3) * x(1); };
  const ParityParts q = parity_decompose(f, ParamDomain::sphere(4));
  for (int k = 0; k < 200; ++k) {
    const Eigen::VectorXd x = u.unit(4);
    CHECK(std::abs(q.sum(x) - f(x)) < 1e-12);
    CHECK(std::abs(q.even(-x) - q.even(x)) < 1e-12);
    CHECK(std::abs(q.odd(-x) + q.odd(x)) < 1e-12);
  }
  CHECK_THROWS_AS(parity_decompose(f, ParamDomain::torus(3)), ContractError);
}

TEST_CASE("antipodal residual of an even section over an even body") {
  // Gradients of even functions are odd, so the residual is −2A(x)f_x(x) and
  // vanishes exactly at the critical points of f.
  const SkewSphereFunctions fns = skew_sphere_functions(2);
  const CylinderSection c(SupportSurface::round(4), fns.f_ev);
  Uniform u(28);
  for (int i = 0; i < 100; ++i) {
    const Eigen::VectorXd x = u.unit(4);
    const Eigen::VectorXd expected = -2.0 * operator_A(c.base(), x) * fns.f_ev.jet(x).grad;
    CHECK((cylinder_parallel_residual(c, x) - expected).norm() < 1e-12);
  }
  CHECK(cylinder_parallel_residual(c, critical_circle_point(2, 0, 0.7)).norm() < 1e-12);
  CHECK(cylinder_parallel_residual(c, critical_circle_point(2, 1, 2.1)).norm() < 1e-12);
}

TEST_CASE("antipodal residual on S^2 vanishes somewhere (odd tangent field)") {
  const SupportSurface base = SupportSurface::perturbed(3, cubic_odd(3), 0.05);
  const SphereFunction f = SphereFunction::homogeneous(3, 0, [](auto u) { return u[0] + 0.5 * u[1] * u[2] + u[2] * u[2]; });
  const CylinderSection c(base, f);
  double largest = 0.0;
  for (const auto& x : ParamDomain::sphere(3).grid(24).points) largest = std::max(largest, cylinder_parallel_residual(c, x).norm());
  const AntipodalResidualSummary r = antipodal_residual_scan(c, 24);
  CHECK(r.min_residual < 0.1 * largest);
}

TEST_CASE("skew S^3: antipodal residual stays above eps") {
  const SkewSphere s = build_skew_sphere(2, 0.01);
  CHECK(antipodal_residual_scan(s.section, 16).min_residual > 0.5 * 0.01 * 2.0);
}

TEST_CASE("hopf_functions") {
  const HopfValues h = hopf_functions(Eigen::Vector4d(1, 0, 0, 0));
  CHECK(h.f_odd == 0.0);
  CHECK(h.g == 0.0);
  CHECK((h.xi - Eigen::Vector4d(0, 1, 0, 0)).norm() < 1e-15);
  Uniform u(29);
  for (int i = 0; i < 1000; ++i) {
    const Eigen::Vector4d p = u.unit(4);
    const HopfValues a = hopf_functions(p), b = hopf_functions(-p);
    CHECK(a.f_odd == -b.f_odd);
    CHECK(a.g == -b.g);
    CHECK(std::abs(a.xi.norm() - 1.0) < 1e-15);
    CHECK(std::abs(a.xi.dot(p)) < 1e-15);
  }
}

TEST_CASE("v·ξ = 2 on every critical circle") {
  for (int n : {2, 3, 4}) {
    const HopfIdentityCheck c = hopf_identity_check(skew_sphere_functions(n), 1000);
    CHECK(static_cast<int>(c.circle_min.size()) == n);
    CHECK(c.max_deviation < 1e-8);
  }
  const HopfIdentityCheck other = hopf_identity_check(skew_sphere_functions(2, {0.5, 3.0}), 1000);
  CHECK(other.max_deviation < 1e-8);
  CHECK_THROWS_AS(skew_sphere_functions(2, {1.0, 1.0}), ContractError);
  CHECK_THROWS_AS(skew_sphere_functions(1), ContractError);
}

TEST_CASE("grad5 margin") {
  const SkewSphereFunctions fns = skew_sphere_functions(2);
  const Grad5Report r = grad5_margin(fns.g, fns.f_ev, fns.f_odd, 0.01, 24);
  CHECK(r.pass);
  CHECK(r.margin > 0.01);
  CHECK(r.bound == doctest::Approx(0.01));
  // Without the odd part the margin is min |(f_ev)_x|, zero on the critical
  // circles (odd resolutions put grid points on them).
  const Grad5Report z = grad5_margin(fns.g, fns.f_ev, SphereFunction::zero(4), 0.01, 9);
  CHECK(z.margin < 1e-12);
  CHECK_FALSE(z.pass);
}

TEST_CASE("build_skew_sphere") {
  const SkewSphere flat = build_skew_sphere(2, 0.0);
  Uniform u(30);
  const Eigen::VectorXd x = u.unit(4);
  CHECK((flat.section.point(x).head(4) - x).norm() < 1e-14);
  CHECK(flat.section.point(x)(4) == doctest::Approx(flat.functions.f_ev(x) + flat.functions.f_odd(x)));
  CHECK(build_skew_sphere(2, 0.01).budget.eps_usable >= 0.01);
  try {
    build_skew_sphere(2, 0.5);
    FAIL("expected a budget refusal");
  } catch (const BudgetError& e) {
    CHECK(e.eps_max() > 0.0);
    CHECK(e.eps_max() < 0.5);
  }
  CHECK_THROWS_AS(build_skew_sphere(2, -0.1), ContractError);
  CHECK(build_skew_sphere(3, 0.001).section.immersion().ambient_dim() == 7);
}

TEST_CASE("torus identities") {
  Uniform u(31);
  const TorusFunctions base = skew_torus_functions(0.0);
  const TorusFunctions odd{TrigSeries({{1, 2, 1.0, 0.0}}), TrigSeries({{1, 2, 0.0, 2.0}})};
  for (int i = 0; i < 1000; ++i) {
    const double a = u.in(0, 2 * kPi), b = u.in(0, 2 * kPi);
    CHECK(std::abs(torus_identity(base, a, b) - 4.0) < 1e-12);
    CHECK(std::abs(torus_identity(odd, a, b) - 4.0) < 1e-12);
  }
}

TEST_CASE("torus linearised residuals") {
  const TorusResiduals one = torus_linearized_residuals(skew_torus_functions(1.0), 512);
  CHECK(one.min_max[2] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
  CHECK(one.min_norm[2] == doctest::Approx(2.0).epsilon(1e-6));
  const TorusResiduals small = torus_linearized_residuals(skew_torus_functions(0.1), 128);
  for (double r : small.min_max) CHECK(r > 0.1);
  // S₁: f^{0,1} = g^{0,1} = 0 leaves (f_β^{0,0}, g_α^{0,0}), with (f_β)² + (g_α)² = 4 forcing max ≥ √2.
  CHECK(small.min_max[0] >= std::sqrt(2.0) - 1e-9);
  const TorusResiduals zero = torus_linearized_residuals(TorusFunctions{}, 64);
  for (double r : zero.min_max) CHECK(r == 0.0);
}

TEST_CASE("torus budget and construction") {
  const EpsilonBudget b = torus_epsilon_budget(skew_torus_functions(0.1));
  CHECK(b.eps_max > 0.0);
  CHECK(b.a >= 0.0);
  CHECK(b.C >= 0.0);
  CHECK(b.b >= 0.0);
  const EpsilonBudget b0 = torus_epsilon_budget(skew_torus_functions(0.0));
  CHECK(b0.eps_max > 0.0);
  CHECK_FALSE(b0.notes.empty());
  CHECK_THROWS_AS(torus_epsilon_budget(TorusFunctions{}), HypothesisViolation);

  const SkewTorus t = build_skew_torus(0.5 * b.eps_usable, 0.1);
  const Eigen::Vector2d p(0.3, 1.2);
  const double f = t.functions.f.value(p(0), p(1)), g = t.functions.g.value(p(0), p(1));
  const double eps = t.eps;
  const Eigen::Vector4d expect((1 + eps * f) * std::cos(p(0)), (1 + eps * f) * std::sin(p(0)),
                               (1 + eps * g) * std::cos(p(1)), (1 + eps * g) * std::sin(p(1)));
  CHECK((t.surface.map(p) - expect).norm() < 1e-15);
  CHECK_THROWS_AS(build_skew_torus(0.01, 0.0), ContractError);
  CHECK_THROWS_AS(build_skew_torus(0.01, 1.0), ContractError);
  CHECK_THROWS_AS(build_skew_torus(0.9, 0.1), BudgetError);
}

TEST_CASE("immersed sphere: Plücker formulas") {
  const GProfile g = GProfile::standard();
  const double h = 1.0 / std::sqrt(5.0);
  CHECK(std::abs(plcoord_formula(0.0, h, 1e-3, g).x1 - plcoord_computed(0.0, h, 1e-3, g).x1) < 1e-5);
  for (double a : {0.3, 1.1, 2.6}) {
    for (double hh : {-0.6, 0.2, 0.7}) {
      const double eps = 1e-3;
      CHECK(std::abs(plcoord_computed(a, hh, eps, g).y3 - 4 * eps * hh * g.value(a)) < 100 * eps * eps);
    }
  }
  // Exact at ε = 0.
  CHECK((plcoord_formula(0.4, 0.3, 0.0, g).as_vector() - plcoord_computed(0.4, 0.3, 0.0, g).as_vector()).norm() < 1e-14);
}

TEST_CASE("immersed sphere: Plücker formula error is second order") {
  const GProfile g = GProfile::standard();
  std::vector<double> logs_e, logs_err;
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    double err = 0.0;
    for (double a = 0.1; a < 2 * kPi; a += 0.37) {
      for (double h = -0.9; h <= 0.9; h += 0.15) {
        err = std::max(err, (plcoord_formula(a, h, eps, g).as_vector() - plcoord_computed(a, h, eps, g).as_vector())
                                .lpNorm<Eigen::Infinity>());
      }
    }
    logs_e.push_back(std::log(eps));
    logs_err.push_back(std::log(err));
  }
  const double me = (logs_e[0] + logs_e[1] + logs_e[2]) / 3, mr = (logs_err[0] + logs_err[1] + logs_err[2]) / 3;
  double num = 0, den = 0;
  for (int i = 0; i < 3; ++i) {
    num += (logs_e[i] - me) * (logs_err[i] - mr);
    den += (logs_e[i] - me) * (logs_e[i] - me);
  }
  CHECK(num / den == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("immersed sphere: linearised residual") {
  const ImmersedSphereResidual r = immersed_sphere_linearized_residual(GProfile::standard(), 200000);
  double oracle = 1e300;
  for (int i = 0; i < 400000; ++i) {
    const double a = 2 * kPi * i / 400000;
    oracle = std::min(oracle, std::max(2 * std::abs(std::sin(2 * a)), 8 * std::abs(std::cos(4 * a))));
  }
  CHECK(r.min_max == doctest::Approx(oracle).epsilon(1e-4));
  CHECK(r.min_max == doctest::Approx(1.295).epsilon(0.01 / 1.295));
  CHECK(immersed_sphere_linearized_residual(GProfile{}, 1000).min_max == 0.0);
  CHECK(immersed_sphere_linearized_residual(GProfile({{2, 1.0, 0.0}}), 1000).min_max < 1e-12);
  CHECK_THROWS_AS(build_immersed_sphere(-0.1), ContractError);
}

TEST_CASE("epsilon_bound") {
  std::vector<double> f, one(400, 1.0), zero(400, 0.0), minus(400, -1.0);
  for (int i = 0; i < 400; ++i) f.push_back(std::pow(std::sin(2 * kPi * i / 400), 2));
  const EpsilonBudget b = epsilon_bound(f, one, one);
  CHECK(b.a == doctest::Approx(0.5));
  CHECK(b.C == doctest::Approx(1.0));
  CHECK(b.b == doctest::Approx(1.0));
  CHECK(b.eps_max == doctest::Approx(0.5));
  CHECK(b.eps_usable == doctest::Approx(kEpsCap));
  CHECK(b.zero_locus_size > 0);

  const EpsilonBudget empty = epsilon_bound(one, minus, zero);
  CHECK(empty.zero_locus_size == 0);
  CHECK(empty.a == doctest::Approx(empty.C));
  CHECK(std::isinf(empty.eps_max));
  CHECK(empty.eps_usable == kEpsCap);

  CHECK_THROWS_AS(epsilon_bound(f, minus, one), HypothesisViolation);
  CHECK_THROWS_AS(epsilon_bound(minus, one, one), ContractError);
  CHECK_THROWS_AS(epsilon_bound(f, std::vector<double>(3, 1.0), one), ContractError);
}
