#pragma once

// Oriented k-planes in ℝ^N as unit simple k-vectors (Plücker vectors).
//
// Plücker coordinates are indexed by increasing k-subsets of {0..N−1} in
// lexicographic order, so for N = 4, k = 2 the order is
// (p12, p13, p14, p23, p24, p34).

#include "skewbrane/errors.hpp"
#include "skewbrane/immersion.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace skewbrane {

/// Increasing k-subsets of {0..n−1}, lexicographic.
std::vector<std::vector<int>> plucker_index_sets(int n, int k);

template <class Scalar = double>
class OrientedPlane {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  OrientedPlane() = default;

  /// Builds from an orthonormal, oriented N×k frame.
  explicit OrientedPlane(Matrix orthonormal_frame) : frame_(std::move(orthonormal_frame)) {
    const int n = static_cast<int>(frame_.rows());
    const int k = static_cast<int>(frame_.cols());
    if (k == 2) {
      plucker_.resize(n * (n - 1) / 2);
      int idx = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          plucker_(idx++) = frame_(i, 0) * frame_(j, 1) - frame_(j, 0) * frame_(i, 1);
        }
      }
    } else {
      const auto sets = plucker_index_sets(n, k);
      plucker_.resize(static_cast<Eigen::Index>(sets.size()));
      Matrix minor(k, k);
      for (size_t s = 0; s < sets.size(); ++s) {
        for (int r = 0; r < k; ++r) minor.row(r) = frame_.row(sets[s][r]);
        plucker_(static_cast<Eigen::Index>(s)) = minor.determinant();
      }
    }
    plucker_.normalize();
  }

  int ambient_dim() const { return static_cast<int>(frame_.rows()); }
  int dim() const { return static_cast<int>(frame_.cols()); }
  const Vector& plucker() const { return plucker_; }
  const Matrix& frame() const { return frame_; }

  /// Same plane with opposite orientation.
  OrientedPlane reversed() const {
    OrientedPlane out = *this;
    out.frame_.col(0) *= Scalar(-1);
    out.plucker_ *= Scalar(-1);
    return out;
  }

 private:
  Matrix frame_;
  Vector plucker_;
};

using OrientedPlaned = OrientedPlane<double>;

/// Orientation-preserving Gram–Schmidt in column order, then wedge.
/// Throws DegeneratePointError for a dependent frame.
template <class Derived>
OrientedPlane<typename Derived::Scalar> plane_from_vectors(const Eigen::MatrixBase<Derived>& vectors) {
  using Scalar = typename Derived::Scalar;
  using Matrix = typename OrientedPlane<Scalar>::Matrix;
  Matrix q = vectors;
  using std::sqrt;
  for (int c = 0; c < q.cols(); ++c) {
    const Scalar original = q.col(c).norm();
    for (int prev = 0; prev < c; ++prev) q.col(c) -= q.col(prev).dot(q.col(c)) * q.col(prev);
    const Scalar remaining = q.col(c).norm();
    if (!(remaining > Scalar(1e-10) * original) || !(original > Scalar(0))) {
      throw DegeneratePointError("degenerate plane: frame vector " + std::to_string(c) +
                                 " is dependent on its predecessors");
    }
    q.col(c) /= remaining;
  }
  return OrientedPlane<Scalar>(std::move(q));
}

OrientedPlaned plane_from_frame(const TangentFrame& frame);

/// Rotated coordinates of a 2-plane in ℝ⁴.
struct PluckerXY {
  double x1 = 0, x2 = 0, x3 = 0, y1 = 0, y2 = 0, y3 = 0;
  Eigen::Matrix<double, 6, 1> as_vector() const {
    Eigen::Matrix<double, 6, 1> v;
    v << x1, x2, x3, y1, y2, y3;
    return v;
  }
};

/// Applies x1 = p12+p34, x2 = p23+p14, x3 = −p13+p24, y1 = p12−p34,
/// y2 = p23−p14, y3 = −p13−p24 to a 6-vector in lexicographic order.
template <class Derived>
PluckerXY xy_from_plucker(const Eigen::MatrixBase<Derived>& p) {
  if (p.size() != 6) throw ContractError("xy coordinates need a bivector of R^4 (6 coordinates)");
  const double p12 = p(0), p13 = p(1), p14 = p(2), p23 = p(3), p24 = p(4), p34 = p(5);
  return {p12 + p34, p23 + p14, -p13 + p24, p12 - p34, p23 - p14, -p13 - p24};
}

PluckerXY to_xy(const OrientedPlaned& plane);

/// Oriented orthogonal complement: (plane frame, complement frame) is a
/// positively oriented basis of ℝ^N.
template <class Scalar>
OrientedPlane<Scalar> normal_plane(const OrientedPlane<Scalar>& plane) {
  using Matrix = typename OrientedPlane<Scalar>::Matrix;
  const int n = plane.ambient_dim(), k = plane.dim();
  if (k <= 0 || k >= n) throw ContractError("normal_plane needs 0 < k < N");
  Eigen::HouseholderQR<Matrix> qr(plane.frame());
  Matrix q = qr.householderQ();
  Matrix complement = q.rightCols(n - k);
  Matrix full(n, n);
  full << plane.frame(), complement;
  if (full.determinant() < Scalar(0)) complement.col(n - k - 1) *= Scalar(-1);
  return OrientedPlane<Scalar>(std::move(complement));
}

/// Euclidean distances |P1 − P2| and |P1 + P2| between unit Plücker vectors.
struct DefectValue {
  double positive = 0.0;
  double negative = 0.0;
  double min() const { return positive < negative ? positive : negative; }
};

template <class Scalar>
DefectValue parallel_defect(const OrientedPlane<Scalar>& a, const OrientedPlane<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.dim() != b.dim()) {
    throw ContractError("parallel_defect: planes of different (N,k)");
  }
  return {static_cast<double>((a.plucker() - b.plucker()).norm()),
          static_cast<double>((a.plucker() + b.plucker()).norm())};
}

/// Sign of the row-to-column reindexing permutation of a q×p matrix,
/// (i−1)p + j ↦ (j−1)q + i.
struct PermutationSign {
  int sign = 1;
  std::int64_t inversions = 0;
  int binomial_parity = 0;  ///< C(p,2)·C(q,2) mod 2
  int formula_parity = 0;   ///< (pq/4) mod 2
  std::int64_t binomial_product = 0;
  bool consistent() const {
    return (inversions % 2) == binomial_parity && binomial_parity == formula_parity &&
           inversions == binomial_product;
  }
};

/// Counts inversions by explicit enumeration over all position pairs.
/// Requires even positive p, q with p·q ≤ 10⁴.
PermutationSign transpose_permutation_sign(int p, int q);

/// Oriented plane used to compare tangent spaces of a codimension-2 surface:
/// the tangent plane when k ≤ N − k, otherwise its oriented normal plane.
OrientedPlaned gauss_plane(const Immersion& surface, const Eigen::VectorXd& p);

/// True when gauss_plane returns normal planes for this surface.
bool uses_normal_planes(const Immersion& surface);

}  // namespace skewbrane
