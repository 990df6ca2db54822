#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <string>
#include <vector>

namespace skewbrane {

enum class DomainKind {
  kTorus,           ///< (θ_1..θ_k) ∈ [0,2π)^k, every coordinate periodic
  kCylinderSphere,  ///< (α,h) ∈ [0,2π)×[−1,1], cylindrical coordinates on S²
  kSphere,          ///< unit vectors x ∈ S^{m−1} ⊂ ℝ^m
};

/// Sample points of a domain together with their grid-adjacency lists.
struct Grid {
  std::vector<Eigen::VectorXd> points;
  std::vector<std::vector<int>> neighbors;
  /// Largest distance between a point and its nearest neighbour.
  double spacing = 0.0;
};

/// Parameter domain of an immersion.
///
/// Points are stored in domain coordinates: angles for tori, (α,h) for the
/// cylinder-sphere, and the unit vector itself for spheres. Distances are
/// chord distances in the domain's standard embedding, so the two poles of the
/// cylinder-sphere are single points regardless of α.
class ParamDomain {
 public:
  static ParamDomain torus(int dim = 2);
  static ParamDomain cylinder_sphere();
  /// Unit sphere S^{m−1} in ℝ^m.
  static ParamDomain sphere(int ambient);

  DomainKind kind() const { return kind_; }
  /// Manifold dimension k.
  int dim() const { return dim_; }
  /// Length of the coordinate vector of a point.
  int coord_size() const { return kind_ == DomainKind::kSphere ? dim_ + 1 : dim_; }
  const std::vector<bool>& periodic() const { return periodic_; }
  std::string name() const;
  /// Loci where the coordinate chart degenerates and a limit rule is used.
  std::vector<std::string> degenerate_loci() const;

  /// Wraps periodic coordinates, normalises sphere points. Throws DomainError
  /// for points outside a non-periodic range and ContractError on size mismatch.
  Eigen::VectorXd canonical(const Eigen::VectorXd& p) const;
  Eigen::VectorXd embed(const Eigen::VectorXd& p) const;
  double distance(const Eigen::VectorXd& p, const Eigen::VectorXd& q) const;

  /// Moves p by the local step t ∈ ℝ^k. Coordinate-additive on tori and on the
  /// cylinder away from the poles; tangent-plane chart of the embedded sphere
  /// otherwise.
  Eigen::VectorXd retract(const Eigen::VectorXd& p, const Eigen::VectorXd& t) const;

  /// Sampling grid; `resolution` is per coordinate (per face coordinate for
  /// spheres, which use a cube-sphere layout).
  Grid grid(int resolution) const;

  /// Uniformly distributed random point, driven by a caller-supplied source of
  /// uniform [0,1) variates.
  template <class Uniform>
  Eigen::VectorXd random_point(Uniform&& u) const;

 private:
  ParamDomain(DomainKind kind, int dim);

  DomainKind kind_;
  int dim_;
  std::vector<bool> periodic_;
};

/// Oriented orthonormal basis of T_x S^{m−1}: columns t_i with
/// det[x, t_1, …, t_{m−1}] = +1.
Eigen::MatrixXd sphere_tangent_basis(const Eigen::VectorXd& x);

/// Number of cube-sphere cell centres on S^{m−1} with n cells per face edge.
long cube_sphere_size(int ambient, int n);
/// Cell centre `index` (0 ≤ index < cube_sphere_size) projected to the sphere.
Eigen::VectorXd cube_sphere_point(int ambient, int n, long index);

/// Reduces an angle to [0, 2π).
double wrap_angle(double a);
/// Reduces an angle to (−π, π].
double wrap_signed(double a);

template <class Uniform>
Eigen::VectorXd ParamDomain::random_point(Uniform&& u) const {
  constexpr double kTwoPi = 6.283185307179586;
  switch (kind_) {
    case DomainKind::kTorus: {
      Eigen::VectorXd p(dim_);
      for (int i = 0; i < dim_; ++i) p(i) = kTwoPi * u();
      return p;
    }
    case DomainKind::kCylinderSphere:
      // Archimedes: h uniform gives area-uniform points.
      return Eigen::Vector2d(kTwoPi * u(), -1.0 + 2.0 * u());
    case DomainKind::kSphere:
    default: {
      Eigen::VectorXd x(dim_ + 1);
      do {
        for (int i = 0; i < x.size(); ++i) {
          // Box–Muller on pairs keeps this independent of <random> distributions.
          const double r = std::sqrt(-2.0 * std::log(1.0 - u()));
          x(i) = r * std::cos(kTwoPi * u());
        }
      } while (x.norm() < 1e-8);
      return x.normalized();
    }
  }
}

}  // namespace skewbrane
