#include "skewbrane/hopf.hpp"

#include "skewbrane/domain.hpp"
#include "skewbrane/errors.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <set>
#include <thread>
#include <type_traits>

namespace skewbrane {

namespace {

// Cubic local pair around C_i, multiplied by its bump; `pick` selects f or g.
template <bool kIsF>
auto glued_local_functions(int n, std::vector<int> partner) {
  return [n, partner](auto u) {
    using T = std::remove_cvref_t<decltype(u[0])>;
    static const double s_out = bump_threshold(kBumpOuter);
    T acc(0.0);
    for (int i = 0; i < n; ++i) {
      T s(0.0);
      for (int l = 0; l < n; ++l) {
        if (l != i) s += u[2 * l] * u[2 * l] + u[2 * l + 1] * u[2 * l + 1];
      }
      if (value_of(s) >= s_out) continue;
      const int j = partner[i];
      const T local = kIsF ? hopf_f(u[2 * i], u[2 * i + 1], u[2 * j], u[2 * j + 1])
                           : hopf_g(u[2 * i], u[2 * i + 1], u[2 * j], u[2 * j + 1]);
      acc += circle_bump(s) * local;
    }
    return acc;
  };
}

}  // namespace

HopfValues hopf_functions(const Eigen::Vector4d& p) {
  HopfValues out;
  out.f_odd = hopf_f(p(0), p(1), p(2), p(3));
  out.g = hopf_g(p(0), p(1), p(2), p(3));
  out.xi = hopf_field(p);
  return out;
}

Eigen::VectorXd hopf_field(const Eigen::VectorXd& x) {
  if (x.size() % 2 != 0) throw ContractError("hopf_field needs an even ambient dimension");
  Eigen::VectorXd xi(x.size());
  for (Eigen::Index k = 0; k < x.size(); k += 2) {
    xi(k) = -x(k + 1);
    xi(k + 1) = x(k);
  }
  return xi;
}

SkewSphereFunctions skew_sphere_functions(int n, std::vector<double> a) {
  if (n < 2 || n > 4) throw ContractError("skew sphere: n must be in [2, 4], got " + std::to_string(n));
  if (a.empty()) {
    for (int i = 1; i <= n; ++i) a.push_back(i);
  }
  if (static_cast<int>(a.size()) != n) throw ContractError("skew sphere: need exactly n coefficients a_i");
  if (std::set<double>(a.begin(), a.end()).size() != a.size()) {
    throw ContractError("skew sphere: coefficients a_i must be distinct");
  }
  for (double ai : a) {
    if (!(ai > 0.0)) throw ContractError("skew sphere: coefficients a_i must be positive");
  }

  SkewSphereFunctions out;
  out.n = n;
  out.a = a;
  for (int i = 0; i < n; ++i) out.partner.push_back((i + 1) % n);
  const int m = 2 * n;
  out.f_ev = SphereFunction::homogeneous(m, 0, [n, a](auto u) {
    using T = std::remove_cvref_t<decltype(u[0])>;
    T acc(0.0);
    for (int i = 0; i < n; ++i) acc += a[i] * (u[2 * i] * u[2 * i] + u[2 * i + 1] * u[2 * i + 1]);
    return acc;
  });
  out.f_odd = SphereFunction::homogeneous(m, 0, glued_local_functions<true>(n, out.partner));
  out.g = SphereFunction::homogeneous(m, 1, glued_local_functions<false>(n, out.partner));
  return out;
}

Eigen::VectorXd critical_circle_point(int n, int i, double theta) {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(2 * n);
  x(2 * i) = std::cos(theta);
  x(2 * i + 1) = std::sin(theta);
  return x;
}

Eigen::VectorXd hopf_perturbation_field(const SkewSphereFunctions& fns, const Eigen::VectorXd& x) {
  return fns.g.jet(x).hess * fns.f_odd.jet(x).grad;
}

HopfIdentityCheck hopf_identity_check(const SkewSphereFunctions& fns, int samples) {
  if (samples < 1) throw ContractError("hopf_identity_check: samples must be positive");
  HopfIdentityCheck out;
  out.min_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < fns.n; ++i) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int k = 0; k < samples; ++k) {
      const Eigen::VectorXd x = critical_circle_point(fns.n, i, 2.0 * std::numbers::pi * k / samples);
      const double val = hopf_perturbation_field(fns, x).dot(hopf_field(x));
      lo = std::min(lo, val);
      hi = std::max(hi, val);
      out.max_deviation = std::max(out.max_deviation, std::abs(val - 2.0));
      ++out.samples;
    }
    out.circle_min.push_back(lo);
    out.circle_max.push_back(hi);
    out.min_value = std::min(out.min_value, lo);
  }
  return out;
}

Grad5Report grad5_margin(const SphereFunction& g, const SphereFunction& f_ev, const SphereFunction& f_odd,
                         double eps, int resolution, double hopf_constant, int threads) {
  const int m = g.ambient();
  if (m % 2 != 0 || f_ev.ambient() != m || f_odd.ambient() != m) {
    throw ContractError("grad5_margin: functions must live on the same odd-dimensional sphere");
  }
  const long total = cube_sphere_size(m, resolution);
  threads = std::max(1, threads);

  struct Partial {
    double margin = std::numeric_limits<double>::infinity();
    long worst = 0;
    double max_v = 0.0;
  };
  std::vector<Partial> parts(threads);
  auto work = [&](int t) {
    Partial& p = parts[t];
    for (long i = t; i < total; i += threads) {
      const Eigen::VectorXd x = cube_sphere_point(m, resolution, i);
      const Eigen::VectorXd v = g.jet(x).hess * f_odd.jet(x).grad;
      const double margin = (f_ev.jet(x).grad - eps * v).norm();
      p.max_v = std::max(p.max_v, v.norm());
      if (margin < p.margin) {
        p.margin = margin;
        p.worst = i;
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  Grad5Report out;
  out.eps = eps;
  out.hopf_constant = hopf_constant;
  out.samples = total;
  out.margin = std::numeric_limits<double>::infinity();
  long worst = 0;
  for (const auto& p : parts) {
    out.max_field_norm = std::max(out.max_field_norm, p.max_v);
    if (p.margin < out.margin || (p.margin == out.margin && p.worst < worst)) {
      out.margin = p.margin;
      worst = p.worst;
    }
  }
  out.worst_point = cube_sphere_point(m, resolution, worst);
  out.bound = eps * hopf_constant / 2.0;
  out.pass = out.margin > out.bound;
  return out;
}

EpsilonBudget skew_sphere_budget(const SkewSphereFunctions& fns, int resolution, double eps_cap) {
  const int m = 2 * fns.n;
  if (resolution <= 0) {
    resolution = kBudgetMaxResolution;
    while (resolution > 2 && cube_sphere_size(m, resolution) > kBudgetMaxSamples) --resolution;
  }
  const long total = cube_sphere_size(m, resolution);
  std::vector<Eigen::VectorXd> grad_ev(total), field(total);
  double max_v = 0.0;
  for (long i = 0; i < total; ++i) {
    const Eigen::VectorXd x = cube_sphere_point(m, resolution, i);
    grad_ev[i] = fns.f_ev.jet(x).grad;
    field[i] = hopf_perturbation_field(fns, x);
    max_v = std::max(max_v, field[i].norm());
  }
  const HopfIdentityCheck circles = hopf_identity_check(fns, 64);
  const double c = circles.min_value;

  auto passes = [&](double eps) {
    for (long i = 0; i < total; ++i) {
      if ((grad_ev[i] - eps * field[i]).norm() <= eps * c / 2.0) return false;
    }
    return true;
  };

  EpsilonBudget out;
  out.method = "grad5-margin-scan";
  out.a = 0.5 * c;
  out.C = max_v;
  out.b = max_v;
  out.eps_cap = eps_cap;
  constexpr int kSteps = 1000;
  double last = 0.0;
  for (int k = 1; k <= kSteps; ++k) {
    const double eps = eps_cap * k / kSteps;
    if (!passes(eps)) break;
    last = eps;
  }
  out.eps_max = last;
  out.eps_usable = std::min(last, eps_cap);
  out.notes.push_back("largest eps on a " + std::to_string(kSteps) + "-step ladder with grad5 margin > eps*c/2 on a " +
                      std::to_string(total) + "-point cube-sphere grid; c = min v.xi on the critical circles");
  return out;
}

SkewSphere build_skew_sphere(int n, double eps, std::vector<double> a) {
  if (!(eps >= 0.0)) throw ContractError("skew sphere: eps must be >= 0");
  SkewSphereFunctions fns = skew_sphere_functions(n, std::move(a));
  EpsilonBudget budget = skew_sphere_budget(fns);
  if (eps > budget.eps_usable) {
    throw BudgetError("skew sphere: eps = " + std::to_string(eps) + " exceeds the budget " +
                          std::to_string(budget.eps_usable),
                      budget.eps_usable);
  }
  SupportSurface base = SupportSurface::perturbed(2 * n, fns.g, eps, "skew-sphere-base");
  const SphereFunction f_ev = fns.f_ev, f_odd = fns.f_odd;
  SphereFunction f = SphereFunction::composite(
      2 * n, 0, [f_ev, f_odd](const Eigen::VectorXd& y) { return f_ev(y) + f_odd(y); },
      [f_ev, f_odd](const Eigen::VectorXd& y) {
        SecondOrder s = f_ev.jet(y);
        const SecondOrder o = f_odd.jet(y);
        s.value += o.value;
        s.grad += o.grad;
        s.hess += o.hess;
        return s;
      });
  CylinderSection section(std::move(base), std::move(f), "skew-sphere" + std::to_string(2 * n - 1));
  return {std::move(fns), eps, std::move(budget), std::move(section)};
}

}  // namespace skewbrane
