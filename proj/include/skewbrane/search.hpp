#pragma once

// Detection of parallel tangent planes and double points on M×M:
// coarse product-grid scan, damped Gauss–Newton refinement in local charts,
// clustering, and classification by sign.

#include "skewbrane/grassmann.hpp"
#include "skewbrane/immersion.hpp"
#include "skewbrane/support.hpp"

#include <Eigen/Dense>

#include <iosfwd>
#include <string>
#include <vector>

namespace skewbrane {

enum class SignClass { kPositive = 0, kNegative = 1 };

enum class CertificateStatus { kPairsFound, kHeuristicallySkew, kInconclusive };

std::string to_string(SignClass s);
std::string to_string(CertificateStatus s);

struct SearchConfig {
  int resolution = 32;          ///< coarse grid resolution per coordinate
  double tau_seed = 0.2;
  double tau_accept = 1e-10;
  double tau_reject = 1e-4;
  double delta_diag = 0.3;      ///< minimum parameter distance between p and q
  double delta_cluster = 0.05;
  int max_iterations = 60;
  bool antipodal = false;       ///< cylinder sections: only pairs (x, −x)
  int threads = 1;
  long max_seeds = 200000;      ///< lowest-defect seeds kept when exceeded
  double fd_step = 1e-5;        ///< Jacobian step in chart coordinates
  double transversality_floor = 1e-3;

  /// Throws ConfigError unless τ_accept < τ_reject ≤ τ_seed, δ_cluster < δ_diag
  /// and the counts are positive.
  void validate() const;
};

struct ParallelPair {
  Eigen::VectorXd p;
  Eigen::VectorXd q;
  SignClass sign = SignClass::kNegative;
  double defect = 0.0;
  int iterations = 0;
  int cluster_size = 1;
};

struct SignSummary {
  int pairs = 0;                 ///< clusters with defect < τ_accept
  double min_defect = 0.0;       ///< over the grid and all refined seeds
  long seeds = 0;
  int unresolved = 0;            ///< clusters ending in [τ_accept, τ_reject]
  CertificateStatus status = CertificateStatus::kInconclusive;
};

struct SkewReport {
  std::string surface;
  int resolution = 0;
  long grid_points = 0;
  long pairs_scanned = 0;
  bool antipodal = false;
  SignSummary positive;
  SignSummary negative;
  CertificateStatus status = CertificateStatus::kInconclusive;
  std::vector<ParallelPair> pairs;   ///< accepted pairs, both signs
  /// Largest |P(p) − P(q)|/dist(p,q) over grid edges, and the grid spacing.
  double lipschitz = 0.0;
  double spacing = 0.0;
  bool seeds_truncated = false;

  const SignSummary& summary(SignClass s) const { return s == SignClass::kPositive ? positive : negative; }
};

struct DoublePoint {
  Eigen::VectorXd p;
  Eigen::VectorXd q;
  Eigen::VectorXd image;
  double residual = 0.0;      ///< |F(p) − F(q)|
  int sign = 0;               ///< ±1 for N = 4, 0 otherwise
  double margin = 0.0;        ///< σ_min of the two stacked orthonormal frames
  bool transversal = true;
};

struct DoublePointReport {
  std::string surface;
  std::vector<DoublePoint> points;
  int signed_count = 0;       ///< d = Σ signs over transversal points
  int flagged = 0;            ///< non-transversal points excluded from d
};

/// Canonical order of an unordered pair (lexicographic on coordinates).
void canonicalize(Eigen::VectorXd& p, Eigen::VectorXd& q);

/// Distance between unordered pairs: min over both matchings of the larger
/// coordinate distance.
double pair_distance(const ParamDomain& dom, const Eigen::VectorXd& p1, const Eigen::VectorXd& q1,
                     const Eigen::VectorXd& p2, const Eigen::VectorXd& q2);

/// Full scan of M×M outside the diagonal band.
SkewReport scan_pairs(const Immersion& surface, const SearchConfig& cfg);

/// Parallel partners of one fixed point p, refined in q only.
std::vector<ParallelPair> scan_partners(const Immersion& surface, const Eigen::VectorXd& p,
                                        const SearchConfig& cfg);

/// Pairs (x, −x) on a sphere-domain surface (cylinder sections). Requires
/// `cfg.antipodal`.
SkewReport antipodal_scan(const Immersion& section, const SearchConfig& cfg);

struct AntipodalResidualSummary {
  double min_residual = 0.0;
  Eigen::VectorXd argmin;
  long samples = 0;
};

/// Smallest |A(−x)f_x(−x) − A(x)f_x(x)| over the cube-sphere grid.
AntipodalResidualSummary antipodal_residual_scan(const CylinderSection& section, int resolution);

/// Double points F(p) = F(q) with p, q at least δ_diag apart.
DoublePointReport find_double_points(const Immersion& surface, const SearchConfig& cfg);

struct BoundCheck {
  std::string bound_kind;  ///< "chi^2/4" or "|d^2-(1-g)^2|"
  int chi = 0;
  int genus = 0;
  int d = 0;
  double bound = 0.0;
  int negative_pairs = 0;
  bool pass = false;
};

/// Compares the number of negatively parallel pairs found with χ²/4 for an
/// embedded surface or |d² − (1−g)²| for an immersed one.
BoundCheck bound_check(const SkewReport& report, int chi, int genus, int d, bool embedded);

/// Writes a CSV of both defect components for every grid point p against the
/// q-slice of grid points sharing the first coordinate of grid point 0.
void write_defect_csv(const Immersion& surface, int resolution, std::ostream& out);

}  // namespace skewbrane
