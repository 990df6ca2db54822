#pragma once

#include "skewbrane/errors.hpp"
#include "skewbrane/jet.hpp"

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <functional>
#include <memory>
#include <span>
#include <string>

namespace skewbrane {

/// Value, gradient and Hessian of a function on ℝ^m at one point.
struct SecondOrder {
  double value = 0.0;
  Eigen::VectorXd grad;
  Eigen::MatrixXd hess;
};

/// A function on S^{m−1}, evaluated through its extension to ℝ^m that is
/// homogeneous of a fixed degree: E(y) = |y|^d · f(y/|y|).
///
/// The formula is a generic callable taking `std::span<const T>` of the m
/// coordinates of a unit vector, instantiated for double and for Jet2<m>.
class SphereFunction {
 public:
  SphereFunction() = default;

  template <class F>
  static SphereFunction homogeneous(int ambient, int degree, F formula);

  static SphereFunction zero(int ambient);

  /// Wraps already-extended value and jet evaluators.
  static SphereFunction composite(int ambient, int degree,
                                  std::function<double(const Eigen::VectorXd&)> value,
                                  std::function<SecondOrder(const Eigen::VectorXd&)> jet) {
    SphereFunction s;
    s.ambient_ = ambient;
    s.degree_ = degree;
    s.value_ = std::move(value);
    s.jet_ = std::move(jet);
    return s;
  }

  int ambient() const { return ambient_; }
  int degree() const { return degree_; }
  explicit operator bool() const { return static_cast<bool>(value_); }

  /// Value of the extension at y (equal to f on the unit sphere).
  double operator()(const Eigen::VectorXd& y) const { return value_(y); }
  /// Exact derivatives of the extension at y.
  SecondOrder jet(const Eigen::VectorXd& y) const { return jet_(y); }

 private:
  template <int M, class F>
  static SecondOrder evaluate_jet(const F& formula, int degree, const Eigen::VectorXd& y);

  int ambient_ = 0;
  int degree_ = 0;
  std::function<double(const Eigen::VectorXd&)> value_;
  std::function<SecondOrder(const Eigen::VectorXd&)> jet_;
};

template <int M, class F>
SecondOrder SphereFunction::evaluate_jet(const F& formula, int degree, const Eigen::VectorXd& y) {
  using J = Jet2<M>;
  std::array<J, M> vars;
  J r2(0.0);
  for (int i = 0; i < M; ++i) {
    vars[i] = J::variable(y(i), i);
    r2 += vars[i] * vars[i];
  }
  const J r = sqrt(r2);
  std::array<J, M> unit;
  for (int i = 0; i < M; ++i) unit[i] = vars[i] / r;
  J out = formula(std::span<const J>(unit.data(), M));
  for (int d = 0; d < degree; ++d) out = out * r;
  return {out.v, out.g, out.H};
}

template <class F>
SphereFunction SphereFunction::homogeneous(int ambient, int degree, F formula) {
  SphereFunction s;
  s.ambient_ = ambient;
  s.degree_ = degree;
  s.value_ = [formula, degree, ambient](const Eigen::VectorXd& y) {
    const double r = y.norm();
    Eigen::VectorXd u = y / r;
    double v = formula(std::span<const double>(u.data(), ambient));
    for (int d = 0; d < degree; ++d) v *= r;
    return v;
  };
  switch (ambient) {
    case 2: s.jet_ = [formula, degree](const Eigen::VectorXd& y) { return evaluate_jet<2>(formula, degree, y); }; break;
    case 3: s.jet_ = [formula, degree](const Eigen::VectorXd& y) { return evaluate_jet<3>(formula, degree, y); }; break;
    case 4: s.jet_ = [formula, degree](const Eigen::VectorXd& y) { return evaluate_jet<4>(formula, degree, y); }; break;
    case 6: s.jet_ = [formula, degree](const Eigen::VectorXd& y) { return evaluate_jet<6>(formula, degree, y); }; break;
    case 8: s.jet_ = [formula, degree](const Eigen::VectorXd& y) { return evaluate_jet<8>(formula, degree, y); }; break;
    default:
      throw ContractError("SphereFunction: unsupported ambient dimension " + std::to_string(ambient));
  }
  return s;
}

inline SphereFunction SphereFunction::zero(int ambient) {
  return homogeneous(ambient, 0, [](auto u) { return decltype(u[0] * 1.0)(0.0); });
}

}  // namespace skewbrane
