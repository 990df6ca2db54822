#include "skewbrane/immersed_sphere.hpp"

#include "skewbrane/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace skewbrane {

namespace {

constexpr double kPi = std::numbers::pi;

// G = F/(1−h²)
Eigen::Vector4d profile_point(double a, double h, double eps, const GProfile& g) {
  const double c = std::cos(a), s = std::sin(a), gv = g.value(a);
  return {c, s, h * c - eps * gv * s, h * s + eps * gv * c};
}

Eigen::Vector4d profile_d_alpha(double a, double h, double eps, const GProfile& g) {
  const double c = std::cos(a), s = std::sin(a), gv = g.value(a), gd = g.derivative(a);
  return {-s, c, -h * s - eps * (gd * s + gv * c), h * c + eps * (gd * c - gv * s)};
}

Eigen::Vector4d d_h(double a, double h, double eps, const GProfile& g) {
  const Eigen::Vector4d gh(0.0, 0.0, std::cos(a), std::sin(a));
  return -2.0 * h * profile_point(a, h, eps, g) + (1.0 - h * h) * gh;
}

}  // namespace

GProfile GProfile::standard() { return GProfile({{2, 1.0, 0.0}, {4, 1.0, 0.0}}); }

double GProfile::value(double alpha) const {
  double v = 0.0;
  for (const auto& t : terms_) v += t.s * std::sin(t.k * alpha) + t.c * std::cos(t.k * alpha);
  return v;
}

double GProfile::derivative(double alpha) const {
  double v = 0.0;
  for (const auto& t : terms_) v += t.k * (t.s * std::cos(t.k * alpha) - t.c * std::sin(t.k * alpha));
  return v;
}

Immersion build_immersed_sphere(double eps, const GProfile& g) {
  if (!(eps >= 0.0)) throw ContractError("immersed sphere: eps must be >= 0");
  const GProfile prof = g;
  auto map = [prof, eps](const Eigen::VectorXd& p) {
    const double h = p(1);
    return Eigen::VectorXd((1.0 - h * h) * profile_point(p(0), h, eps, prof));
  };
  auto jac = [prof, eps](const Eigen::VectorXd& p) {
    const double a = p(0), h = p(1);
    Eigen::MatrixXd j(4, 2);
    j.col(0) = (1.0 - h * h) * profile_d_alpha(a, h, eps, prof);
    j.col(1) = d_h(a, h, eps, prof);
    return j;
  };
  auto pole = [prof, eps](const Eigen::VectorXd& p) {
    const double a = p(0), h = p(1);
    Eigen::MatrixXd j(4, 2);
    j.col(0) = profile_d_alpha(a, h, eps, prof);
    j.col(1) = d_h(a, h, eps, prof);
    return j;
  };
  return Immersion(eps == 0.0 ? "sphere-m0" : "skew-imm-sphere", ParamDomain::cylinder_sphere(), 4, map, jac,
                   pole, {{"eps", eps}});
}

Immersion build_m0() { return build_immersed_sphere(0.0, GProfile()); }

PluckerXY plcoord_formula(double alpha, double h, double eps, const GProfile& g) {
  const double gv = g.value(alpha), gd = g.derivative(alpha);
  const double c2 = std::cos(2.0 * alpha), s2 = std::sin(2.0 * alpha);
  PluckerXY out;
  out.x1 = h * (1.0 + 3.0 * h * h) - eps * (1.0 - 3.0 * h * h) * gd;
  out.x2 = c2 * ((1.0 - h * h) + 2.0 * eps * h * gd);
  out.x3 = s2 * ((1.0 - h * h) + 2.0 * eps * h * gd);
  out.y1 = 3.0 * h * (1.0 - h * h) + eps * (1.0 - 3.0 * h * h) * gd;
  out.y2 = (1.0 - 5.0 * h * h) - 2.0 * eps * h * gd;
  out.y3 = 4.0 * eps * h * gv;
  return out;
}

PluckerXY plcoord_computed(double alpha, double h, double eps, const GProfile& g) {
  const Eigen::Vector4d a = profile_d_alpha(alpha, h, eps, g);
  const Eigen::Vector4d b = d_h(alpha, h, eps, g);
  Eigen::Matrix<double, 6, 1> p;
  int idx = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) p(idx++) = a(i) * b(j) - a(j) * b(i);
  }
  return xy_from_plucker(p);
}

ImmersedSphereResidual immersed_sphere_linearized_residual(const GProfile& g, int resolution) {
  if (resolution < 1) throw ContractError("immersed_sphere_linearized_residual: resolution must be positive");
  ImmersedSphereResidual out;
  out.resolution = resolution;
  out.min_max = std::numeric_limits<double>::infinity();
  for (int i = 0; i < resolution; ++i) {
    const double a = 2.0 * kPi * i / resolution;
    // 2β = 2α + π has the two solutions β = α + π/2 and α + 3π/2.
    for (double shift : {0.5 * kPi, 1.5 * kPi}) {
      const double b = a + shift;
      const double r = std::max(std::abs(g.value(b) - g.value(a)), std::abs(g.derivative(b) + g.derivative(a)));
      if (r < out.min_max) {
        out.min_max = r;
        out.argmin_alpha = a;
        out.argmin_beta = std::fmod(b, 2.0 * kPi);
      }
    }
  }
  return out;
}

}  // namespace skewbrane
