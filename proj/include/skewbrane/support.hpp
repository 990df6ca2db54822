#pragma once

// Convex hypersurfaces given by their support function, and graph-type
// codimension-2 surfaces over them (cylinder sections).

#include "skewbrane/immersion.hpp"
#include "skewbrane/sphere_function.hpp"

#include <Eigen/Dense>

#include <string>

namespace skewbrane {

/// Support function h on S^{m−1}, extended 1-homogeneously to ℝ^m.
class SupportSurface {
 public:
  SupportSurface() = default;
  /// `h` must have degree 1.
  SupportSurface(std::string name, SphereFunction h, double eps_h = 0.0);

  /// h ≡ 1, the unit sphere.
  static SupportSurface round(int ambient);
  /// h = 1 + ε·g with g given on the sphere.
  static SupportSurface perturbed(int ambient, const SphereFunction& g, double eps, std::string name = "");

  const std::string& name() const { return name_; }
  int ambient() const { return h_.ambient(); }
  double eps_h() const { return eps_h_; }
  const SphereFunction& h() const { return h_; }

  double value(const Eigen::VectorXd& x) const { return h_(x); }
  Eigen::VectorXd grad(const Eigen::VectorXd& x) const { return h_.jet(x).grad; }
  Eigen::MatrixXd hess(const Eigen::VectorXd& x) const { return h_.jet(x).hess; }

 private:
  std::string name_;
  SphereFunction h_;
  double eps_h_ = 0.0;
};

/// Point of the hypersurface with outward normal x: y = h_x(x).
/// Throws ContractError unless |x| = 1 to 1e−9.
Eigen::VectorXd support_parameterize(const SupportSurface& s, const Eigen::VectorXd& x);

/// Inverse of h_xx restricted to T_x S^{m−1}, extended by zero on x (m×m).
/// Throws ConvexityLossError when the restricted Hessian is not safely
/// positive definite.
Eigen::MatrixXd operator_A(const SupportSurface& s, const Eigen::VectorXd& x);

/// N = {(h_x(x), f(x))} ⊂ ℝ^{m+1}. The section f is evaluated through its
/// degree-0 extension, so f_x is tangent to the sphere.
class CylinderSection {
 public:
  CylinderSection(SupportSurface base, SphereFunction f, std::string name = "");

  const SupportSurface& base() const { return base_; }
  const SphereFunction& f() const { return f_; }
  const std::string& name() const { return name_; }

  Eigen::VectorXd point(const Eigen::VectorXd& x) const;
  /// (m+1)×m matrix [h_xx ; f_xᵀ]; its action on T_x S^{m−1} is the differential.
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& x) const;
  Immersion immersion(Params params = {}) const;

 private:
  SupportSurface base_;
  SphereFunction f_;
  std::string name_;
};

/// A(−x)f_x(−x) − A(x)f_x(x). Tangent planes at x and −x are parallel exactly
/// when this vanishes.
Eigen::VectorXd cylinder_parallel_residual(const CylinderSection& c, const Eigen::VectorXd& x);

}  // namespace skewbrane
