#include "skewbrane/support.hpp"

#include "skewbrane/errors.hpp"

#include <cmath>
#include <utility>

namespace skewbrane {

namespace {

constexpr double kUnitTolerance = 1e-9;
constexpr double kConvexityFloor = 1e-8;

void require_unit(const Eigen::VectorXd& x, const char* who) {
  if (std::abs(x.norm() - 1.0) > kUnitTolerance) {
    throw ContractError(std::string(who) + ": expected a unit vector, |x| = " + std::to_string(x.norm()));
  }
}

}  // namespace

SupportSurface::SupportSurface(std::string name, SphereFunction h, double eps_h)
    : name_(std::move(name)), h_(std::move(h)), eps_h_(eps_h) {
  if (h_.degree() != 1) throw ContractError("support function must be extended with degree 1");
}

SupportSurface SupportSurface::round(int ambient) {
  return SupportSurface("round", SphereFunction::homogeneous(ambient, 1, [](auto u) {
                          return decltype(u[0] * 1.0)(1.0);
                        }));
}

SupportSurface SupportSurface::perturbed(int ambient, const SphereFunction& g, double eps, std::string name) {
  if (g.ambient() != ambient) throw ContractError("perturbation lives on a different sphere");
  // h = r + ε·r·g(y/r)
  SupportSurface s;
  s.name_ = name.empty() ? "perturbed" : std::move(name);
  s.eps_h_ = eps;
  const SphereFunction one = round(ambient).h();
  const SphereFunction gd = g;
  s.h_ = SphereFunction::composite(
      ambient, 1,
      [one, gd, eps](const Eigen::VectorXd& y) {
        return one(y) + eps * y.norm() * gd(y / y.norm());
      },
      [one, gd, eps](const Eigen::VectorXd& y) {
        SecondOrder a = one.jet(y);
        const SecondOrder b = gd.jet(y);
        if (gd.degree() == 1) {
          a.value += eps * b.value;
          a.grad += eps * b.grad;
          a.hess += eps * b.hess;
          return a;
        }
        // degree-0 g: ε·r·g, product rule with r
        const double r = y.norm();
        const Eigen::VectorXd u = y / r;
        const Eigen::MatrixXd rh = (Eigen::MatrixXd::Identity(y.size(), y.size()) - u * u.transpose()) / r;
        a.value += eps * r * b.value;
        a.grad += eps * (u * b.value + r * b.grad);
        a.hess += eps * (rh * b.value + u * b.grad.transpose() + b.grad * u.transpose() + r * b.hess);
        return a;
      });
  return s;
}

Eigen::VectorXd support_parameterize(const SupportSurface& s, const Eigen::VectorXd& x) {
  require_unit(x, "support_parameterize");
  return s.grad(x);
}

Eigen::MatrixXd operator_A(const SupportSurface& s, const Eigen::VectorXd& x) {
  require_unit(x, "operator_A");
  const Eigen::MatrixXd basis = sphere_tangent_basis(x);
  const Eigen::MatrixXd restricted = basis.transpose() * s.hess(x) * basis;
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(restricted);
  const auto& ev = eig.eigenvalues();
  const double lo = ev(0), hi = ev(ev.size() - 1);
  if (!(lo > kConvexityFloor * std::max(1.0, std::abs(hi)))) {
    throw ConvexityLossError("support function '" + s.name() +
                             "' loses strict convexity: restricted Hessian eigenvalue " + std::to_string(lo));
  }
  const Eigen::MatrixXd inv =
      eig.eigenvectors() * ev.cwiseInverse().asDiagonal() * eig.eigenvectors().transpose();
  return basis * inv * basis.transpose();
}

CylinderSection::CylinderSection(SupportSurface base, SphereFunction f, std::string name)
    : base_(std::move(base)), f_(std::move(f)), name_(std::move(name)) {
  if (f_.ambient() != base_.ambient()) throw ContractError("section and base live on different spheres");
  if (f_.degree() != 0) throw ContractError("section function must be extended with degree 0");
}

Eigen::VectorXd CylinderSection::point(const Eigen::VectorXd& x) const {
  const int m = base_.ambient();
  Eigen::VectorXd out(m + 1);
  out.head(m) = base_.grad(x);
  out(m) = f_(x);
  return out;
}

Eigen::MatrixXd CylinderSection::jacobian(const Eigen::VectorXd& x) const {
  const int m = base_.ambient();
  Eigen::MatrixXd j(m + 1, m);
  j.topRows(m) = base_.hess(x);
  j.row(m) = f_.jet(x).grad.transpose();
  return j;
}

Immersion CylinderSection::immersion(Params params) const {
  const CylinderSection self = *this;
  return Immersion(
      name_.empty() ? "cylinder-section" : name_, ParamDomain::sphere(base_.ambient()), base_.ambient() + 1,
      [self](const Eigen::VectorXd& x) { return self.point(x); },
      [self](const Eigen::VectorXd& x) { return self.jacobian(x); }, {}, std::move(params));
}

Eigen::VectorXd cylinder_parallel_residual(const CylinderSection& c, const Eigen::VectorXd& x) {
  require_unit(x, "cylinder_parallel_residual");
  const Eigen::VectorXd nx = -x;
  return operator_A(c.base(), nx) * c.f().jet(nx).grad - operator_A(c.base(), x) * c.f().jet(x).grad;
}

}  // namespace skewbrane
