#pragma once

#include "skewbrane/domain.hpp"

#include <Eigen/Dense>

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace skewbrane {

/// Central finite-difference step.
inline constexpr double kFdStep = 1e-5;
/// Relative rank threshold σ_min/σ_max below which a frame is degenerate.
inline constexpr double kRankThreshold = 1e-6;
/// |h| above which cylinder-sphere frames use the pole-rescaled α column.
inline constexpr double kPoleBand = 1e-3;

using Params = std::map<std::string, double>;

/// Parameterised map from a domain into ℝ^N.
///
/// The optional `jacobian` returns, for tori and the cylinder-sphere, the N×k
/// matrix of coordinate partials. For spheres it returns an N×m matrix whose
/// action on T_x S^{m−1} is the differential (any extension off the sphere
/// will do). `pole_jacobian` (cylinder-sphere only) returns the columns
/// (∂_αF/(1−h²), ∂_hF), which stay finite at h = ±1.
class Immersion {
 public:
  using PointMap = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
  using JacobianMap = std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>;

  Immersion(std::string name, ParamDomain domain, int ambient_dim, PointMap map,
            JacobianMap jacobian = {}, JacobianMap pole_jacobian = {}, Params params = {});

  const std::string& name() const { return name_; }
  const ParamDomain& domain() const { return domain_; }
  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return domain_.dim(); }
  const Params& params() const { return params_; }
  bool has_analytic_jacobian() const { return static_cast<bool>(jacobian_); }

  Eigen::VectorXd map(const Eigen::VectorXd& p) const { return map_(p); }
  const JacobianMap& jacobian() const { return jacobian_; }
  const JacobianMap& pole_jacobian() const { return pole_jacobian_; }

 private:
  std::string name_;
  ParamDomain domain_;
  int ambient_dim_;
  PointMap map_;
  JacobianMap jacobian_;
  JacobianMap pole_jacobian_;
  Params params_;
};

/// k tangent vectors at a surface point, ordered by domain coordinate order.
struct TangentFrame {
  Eigen::VectorXd base;
  Eigen::MatrixXd vectors;  ///< N×k
  bool positive = true;     ///< agrees with the domain orientation

  /// Same frame with columns i and j exchanged; the orientation flag flips.
  TangentFrame swapped(int i, int j) const;
};

/// F(p) after wrapping periodic coordinates.
Eigen::VectorXd eval_immersion(const Immersion& surface, const Eigen::VectorXd& p);

/// Oriented tangent frame at p. Throws DegeneratePointError when the frame
/// has relative rank below kRankThreshold.
TangentFrame tangent_frame(const Immersion& surface, const Eigen::VectorXd& p);

/// Frame columns in local chart coordinates, by central differences.
Eigen::MatrixXd fd_frame(const Immersion& surface, const Eigen::VectorXd& p,
                         double step = kFdStep);

/// Frame columns from the analytic Jacobian (no pole rescaling). Requires
/// `has_analytic_jacobian()`.
Eigen::MatrixXd analytic_frame(const Immersion& surface, const Eigen::VectorXd& p);

struct RankReport {
  int samples = 0;
  double min_singular = 0.0;           ///< smallest σ_min over the grid
  double min_relative = 0.0;           ///< smallest σ_min/σ_max over the grid
  Eigen::VectorXd worst_point;
  std::vector<Eigen::VectorXd> flagged;  ///< points with σ_min/σ_max < kRankThreshold
};

/// Smallest singular value of the tangent frame over a sampling grid.
RankReport immersion_rank_scan(const Immersion& surface, int resolution);

}  // namespace skewbrane
