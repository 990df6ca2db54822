#pragma once

// Skew odd-dimensional spheres S^{2n−1} ⊂ ℝ^{2n+1} as cylinder sections over
// h = 1 + ε·g. Coordinates on ℂⁿ = ℝ^{2n} are ordered (x₁, y₁, …, xₙ, yₙ) with
// z_i = x_i + i·y_i.
//
// f_ev = Σ a_i |z_i|² is Morse–Bott with critical circles C_i = {|z_i| = 1}.
// Around C_i, the odd pair (f_i, g_i) below makes g_xx((f_i)_x) · ξ = 2 along
// C_i, with ξ the Hopf field. The local pairs are glued with even bumps.

#include "skewbrane/budget.hpp"
#include "skewbrane/jet.hpp"
#include "skewbrane/sphere_function.hpp"
#include "skewbrane/support.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <vector>

namespace skewbrane {

/// Cubic odd functions for the circle {z₂ = 0}, in the coordinates (x₁,y₁,x₂,y₂).
template <class T>
T hopf_f(const T& x1, const T& y1, const T& x2, const T& y2) {
  return x2 * (x1 * x1 - y1 * y1) + 2.0 * y2 * x1 * y1;
}

template <class T>
T hopf_g(const T& x1, const T& y1, const T& x2, const T& y2) {
  return 2.0 * x2 * x1 * y1 - y2 * (x1 * x1 - y1 * y1);
}

/// Smooth step: 0 for u ≤ 0, 1 for u ≥ 1, C^∞ in between.
template <class T>
T smooth_step(const T& u) {
  const double v = value_of(u);
  if (v <= 0.0) return T(0.0);
  if (v >= 1.0) return T(1.0);
  const T a = exp(-1.0 / u);
  const T b = exp(-1.0 / (1.0 - u));
  return a / (a + b);
}

/// Tubular radii of the gluing bumps around each critical circle.
inline constexpr double kBumpInner = 0.2;
inline constexpr double kBumpOuter = 0.4;

/// For a unit vector, squared distance to C_i is d² = 2 − 2|z_i|, and
/// s_i = 1 − |z_i|² = Σ_{l≠i} |z_l|². These are the bump thresholds in s.
inline double bump_threshold(double radius) {
  const double rho = 1.0 - 0.5 * radius * radius;
  return 1.0 - rho * rho;
}

/// Even bump of s = Σ_{l≠i}|z_l|²: 1 within tubular radius kBumpInner of C_i,
/// 0 beyond kBumpOuter.
template <class T>
T circle_bump(const T& s) {
  static const double s_in = bump_threshold(kBumpInner);
  static const double s_out = bump_threshold(kBumpOuter);
  return smooth_step((s_out - s) / (s_out - s_in));
}

struct HopfValues {
  double f_odd = 0.0;
  double g = 0.0;
  Eigen::Vector4d xi;
};

/// Local functions and the Hopf field at a point of S³ (near {z₂ = 0}).
HopfValues hopf_functions(const Eigen::Vector4d& p);

/// Hopf field ξ = (−y₁, x₁, −y₂, x₂, …) on ℝ^{2n}.
Eigen::VectorXd hopf_field(const Eigen::VectorXd& x);

/// Functions of the skew-sphere construction on S^{2n−1}.
struct SkewSphereFunctions {
  int n = 2;
  std::vector<double> a;
  SphereFunction f_ev;   ///< degree 0
  SphereFunction f_odd;  ///< degree 0
  SphereFunction g;      ///< degree 1 (the perturbation of h)
  /// Partner index j(i) used in the local functions around C_i.
  std::vector<int> partner;
};

/// Requires 2 ≤ n ≤ 4 and n distinct positive coefficients (empty = 1..n).
SkewSphereFunctions skew_sphere_functions(int n, std::vector<double> a = {});

/// Point of C_i at angle θ.
Eigen::VectorXd critical_circle_point(int n, int i, double theta);

/// v = g_xx((f_odd)_x) at a unit vector.
Eigen::VectorXd hopf_perturbation_field(const SkewSphereFunctions& fns, const Eigen::VectorXd& x);

struct HopfIdentityCheck {
  int samples = 0;
  std::vector<double> circle_min;  ///< min v·ξ per circle
  std::vector<double> circle_max;
  double max_deviation = 0.0;      ///< max |v·ξ − 2|
  double min_value = 0.0;          ///< min v·ξ over all circles
};

/// Samples v·ξ at `samples` equally spaced points of every critical circle.
HopfIdentityCheck hopf_identity_check(const SkewSphereFunctions& fns, int samples);

struct Grad5Report {
  double eps = 0.0;
  double margin = 0.0;           ///< min over grid of |(f_ev)_x − ε·v|
  Eigen::VectorXd worst_point;
  double hopf_constant = 2.0;    ///< v·ξ on the critical circles
  double bound = 0.0;            ///< ε·hopf_constant/2
  double max_field_norm = 0.0;   ///< max |v|
  long samples = 0;
  bool pass = false;             ///< margin > bound
};

/// Scans the cube-sphere grid with `resolution` cells per face edge. The
/// margin |(f_ev)_x − ε·g_xx((f_odd)_x)| bounds the antipodal residual from
/// below to first order in ε.
Grad5Report grad5_margin(const SphereFunction& g, const SphereFunction& f_ev, const SphereFunction& f_odd,
                         double eps, int resolution, double hopf_constant = 2.0, int threads = 1);

inline constexpr int kBudgetMaxResolution = 16;
inline constexpr long kBudgetMaxSamples = 40000;

/// Largest ε ≤ cap on a ladder of 1000 steps for which the grad5 check passes
/// on a coarse cube-sphere grid, with a = ½·min v·ξ and C = max |v|.
/// Resolution 0 picks the largest n ≤ 16 with at most 40000 grid points
/// (16 on S³, 5 on S⁵, 3 on S⁷).
EpsilonBudget skew_sphere_budget(const SkewSphereFunctions& fns, int resolution = 0,
                                 double eps_cap = kEpsCap);

struct SkewSphere {
  SkewSphereFunctions functions;
  double eps = 0.0;
  EpsilonBudget budget;
  CylinderSection section;
};

/// Cylinder section over h = 1 + ε·g with f = f_ev + f_odd. Throws BudgetError
/// when ε exceeds the usable budget, ContractError for ε < 0.
SkewSphere build_skew_sphere(int n, double eps, std::vector<double> a = {});

}  // namespace skewbrane
