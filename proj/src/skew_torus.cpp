#include "skewbrane/skew_torus.hpp"

#include "skewbrane/errors.hpp"
#include "skewbrane/parity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace skewbrane {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// A partner system whose first-order gap never exceeds this is degenerate.
constexpr double kInactiveGap = 1e-12;

}  // namespace

TrigSeries TrigSeries::operator+(const TrigSeries& o) const {
  std::vector<TrigTerm> t = terms_;
  t.insert(t.end(), o.terms_.begin(), o.terms_.end());
  return TrigSeries(std::move(t));
}

TrigSeries TrigSeries::operator*(double k) const {
  std::vector<TrigTerm> t = terms_;
  for (auto& term : t) {
    term.c *= k;
    term.s *= k;
  }
  return TrigSeries(std::move(t));
}

double TrigSeries::value(double alpha, double beta) const {
  double v = 0.0;
  for (const auto& t : terms_) {
    const double ph = t.p * alpha + t.q * beta;
    v += t.c * std::cos(ph) + t.s * std::sin(ph);
  }
  return v;
}

double TrigSeries::d_alpha(double alpha, double beta) const {
  double v = 0.0;
  for (const auto& t : terms_) {
    const double ph = t.p * alpha + t.q * beta;
    v += t.p * (-t.c * std::sin(ph) + t.s * std::cos(ph));
  }
  return v;
}

double TrigSeries::d_beta(double alpha, double beta) const {
  double v = 0.0;
  for (const auto& t : terms_) {
    const double ph = t.p * alpha + t.q * beta;
    v += t.q * (-t.c * std::sin(ph) + t.s * std::cos(ph));
  }
  return v;
}

TorusFunctions skew_torus_functions(double delta) {
  TorusFunctions fg;
  fg.f = TrigSeries({{2, 2, 1.0, 0.0}, {1, 2, delta, 0.0}});
  fg.g = TrigSeries({{2, 2, 0.0, 1.0}, {1, 2, 0.0, 2.0 * delta}});
  return fg;
}

double torus_identity(const TorusFunctions& fg, double alpha, double beta) {
  const double fb = fg.f.d_beta(alpha, beta), ga = fg.g.d_alpha(alpha, beta);
  return fb * fb + ga * ga;
}

Immersion build_perturbed_torus(double eps, const TorusFunctions& fg, const std::string& name, Params params) {
  const TorusFunctions c = fg;
  auto map = [c, eps](const Eigen::VectorXd& p) {
    const double a = p(0), b = p(1);
    const double u = 1.0 + eps * c.f.value(a, b), v = 1.0 + eps * c.g.value(a, b);
    return Eigen::VectorXd(Eigen::Vector4d(u * std::cos(a), u * std::sin(a), v * std::cos(b), v * std::sin(b)));
  };
  auto jac = [c, eps](const Eigen::VectorXd& p) {
    const double a = p(0), b = p(1);
    const double ca = std::cos(a), sa = std::sin(a), cb = std::cos(b), sb = std::sin(b);
    const double u = 1.0 + eps * c.f.value(a, b), v = 1.0 + eps * c.g.value(a, b);
    const double ua = eps * c.f.d_alpha(a, b), ub = eps * c.f.d_beta(a, b);
    const double va = eps * c.g.d_alpha(a, b), vb = eps * c.g.d_beta(a, b);
    Eigen::MatrixXd j(4, 2);
    j << ua * ca - u * sa, ub * ca,
         ua * sa + u * ca, ub * sa,
         va * cb, vb * cb - v * sb,
         va * sb, vb * sb + v * cb;
    return j;
  };
  params["eps"] = eps;
  return Immersion(name, ParamDomain::torus(2), 4, map, jac, {}, std::move(params));
}

TorusResiduals torus_linearized_residuals(const TorusFunctions& fg, int resolution) {
  if (resolution < 2) throw ContractError("torus_linearized_residuals: resolution must be >= 2");
  const TorusFunctions c = fg;
  const ParamDomain torus = ParamDomain::torus(2);
  const ParityParts fb = parity_decompose([c](const Eigen::VectorXd& p) { return c.f.d_beta(p(0), p(1)); }, torus);
  const ParityParts ga = parity_decompose([c](const Eigen::VectorXd& p) { return c.g.d_alpha(p(0), p(1)); }, torus);

  // (i1,j1) + (i2,j2) parity parts per system
  const int sys[3][2][2] = {{{0, 0}, {0, 1}}, {{0, 0}, {1, 0}}, {{1, 0}, {0, 1}}};

  TorusResiduals out;
  out.resolution = resolution;
  out.min_max.fill(std::numeric_limits<double>::infinity());
  out.min_norm.fill(std::numeric_limits<double>::infinity());
  for (int ia = 0; ia < resolution; ++ia) {
    for (int ib = 0; ib < resolution; ++ib) {
      const Eigen::Vector2d p(kTwoPi * ia / resolution, kTwoPi * ib / resolution);
      for (int s = 0; s < 3; ++s) {
        const auto& a = sys[s][0];
        const auto& b = sys[s][1];
        const double r1 = fb.part[a[0]][a[1]](p) + fb.part[b[0]][b[1]](p);
        const double r2 = ga.part[a[0]][a[1]](p) + ga.part[b[0]][b[1]](p);
        const double mx = std::max(std::abs(r1), std::abs(r2));
        if (mx < out.min_max[s]) {
          out.min_max[s] = mx;
          out.argmin[s] = p;
        }
        out.min_norm[s] = std::min(out.min_norm[s], std::hypot(r1, r2));
      }
    }
  }
  return out;
}

EpsilonBudget torus_epsilon_budget(const TorusFunctions& fg, int resolution, double eps_cap) {
  if (resolution < 2) throw ContractError("torus_epsilon_budget: resolution must be >= 2");
  const TrigSeries& f = fg.f;
  const TrigSeries& g = fg.g;
  auto coeffs = [&](double a, double b) {
    const double fb = f.d_beta(a, b), ga = g.d_alpha(a, b);
    const double fv = f.value(a, b), gv = g.value(a, b);
    // A, B, A2, B2
    return Eigen::Vector4d(ga - fb, -(fb + ga), gv * ga - fv * fb, -(fv * fb + gv * ga));
  };
  const double lambda[3] = {-1.0, -1.0, 1.0};
  const int n = resolution;
  const size_t total = static_cast<size_t>(n) * n;
  std::vector<std::array<double, 3>> gap(total), second(total);
  std::array<double, 3> max_gap{};
  for (int ia = 0; ia < n; ++ia) {
    for (int ib = 0; ib < n; ++ib) {
      const Eigen::Vector2d p(kTwoPi * ia / n, kTwoPi * ib / n);
      const Eigen::Vector4d base = coeffs(p(0), p(1));
      const size_t idx = static_cast<size_t>(ia) * n + ib;
      for (int s = 0; s < 3; ++s) {
        const Eigen::Vector2d q = torus_action(s + 1, p);
        const Eigen::Vector4d w = coeffs(q(0), q(1)) - lambda[s] * base;
        gap[idx][s] = std::hypot(w(0), w(1));
        second[idx][s] = std::hypot(w(2), w(3));
        max_gap[s] = std::max(max_gap[s], gap[idx][s]);
      }
    }
  }

  const char* names[3] = {"S1", "S2", "S1S2"};
  std::vector<int> active;
  std::vector<std::string> notes;
  for (int s = 0; s < 3; ++s) {
    if (max_gap[s] > kInactiveGap) {
      active.push_back(s);
    } else {
      notes.push_back(std::string("partner system ") + names[s] +
                      " has identically vanishing first-order gap; excluded from the budget");
    }
  }
  if (active.empty()) {
    throw HypothesisViolation("torus budget: every partner system is degenerate (f and g give no first-order gap)");
  }

  std::vector<double> fs(total, 0.0), gs(total), hs(total);
  for (size_t i = 0; i < total; ++i) {
    double gmin = std::numeric_limits<double>::infinity(), hmax = 0.0;
    for (int s : active) {
      gmin = std::min(gmin, gap[i][s]);
      hmax = std::max(hmax, second[i][s]);
    }
    gs[i] = gmin;
    hs[i] = -hmax;
  }
  EpsilonBudget out = epsilon_bound(fs, gs, hs, 0.0, eps_cap);
  out.notes.insert(out.notes.end(), notes.begin(), notes.end());
  return out;
}

SkewTorus build_skew_torus(double eps, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw ContractError("skew torus: delta must lie in (0, 1)");
  if (!(eps >= 0.0)) throw ContractError("skew torus: eps must be >= 0");
  TorusFunctions fg = skew_torus_functions(delta);
  EpsilonBudget budget = torus_epsilon_budget(fg);
  if (eps > budget.eps_usable) {
    throw BudgetError("skew torus: eps = " + std::to_string(eps) + " exceeds the budget " +
                          std::to_string(budget.eps_usable),
                      budget.eps_usable);
  }
  Immersion surface = build_perturbed_torus(eps, fg, "skew-torus", {{"delta", delta}});
  return {std::move(fg), eps, delta, std::move(budget), std::move(surface)};
}

Immersion build_torus0() { return build_perturbed_torus(0.0, TorusFunctions{}, "torus0"); }

}  // namespace skewbrane
