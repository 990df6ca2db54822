#include "skewbrane/grassmann.hpp"

#include <functional>

namespace skewbrane {

std::vector<std::vector<int>> plucker_index_sets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

OrientedPlaned plane_from_frame(const TangentFrame& frame) { return plane_from_vectors(frame.vectors); }

PluckerXY to_xy(const OrientedPlaned& plane) {
  if (plane.ambient_dim() != 4 || plane.dim() != 2) {
    throw ContractError("to_xy requires a 2-plane in R^4, got k=" + std::to_string(plane.dim()) +
                        " N=" + std::to_string(plane.ambient_dim()));
  }
  return xy_from_plucker(plane.plucker());
}

PermutationSign transpose_permutation_sign(int p, int q) {
  if (p <= 0 || q <= 0 || p % 2 != 0 || q % 2 != 0) {
    throw ContractError("transpose_permutation_sign: p and q must be positive and even");
  }
  if (static_cast<long>(p) * q > 10000) throw ContractError("transpose_permutation_sign: p*q > 10^4");

  const int size = p * q;
  // tau[(i-1)p + j] = (j-1)q + i, stored zero-based.
  std::vector<int> tau(size);
  for (int i = 1; i <= q; ++i) {
    for (int j = 1; j <= p; ++j) tau[(i - 1) * p + j - 1] = (j - 1) * q + i - 1;
  }
  PermutationSign out;
  for (int a = 0; a < size; ++a) {
    for (int b = a + 1; b < size; ++b) {
      if (tau[a] > tau[b]) ++out.inversions;
    }
  }
  out.sign = out.inversions % 2 == 0 ? 1 : -1;
  const std::int64_t cp = static_cast<std::int64_t>(p) * (p - 1) / 2;
  const std::int64_t cq = static_cast<std::int64_t>(q) * (q - 1) / 2;
  out.binomial_product = cp * cq;
  out.binomial_parity = static_cast<int>(out.binomial_product % 2);
  out.formula_parity = (p * q / 4) % 2;
  return out;
}

bool uses_normal_planes(const Immersion& surface) {
  return surface.dim() > surface.ambient_dim() - surface.dim();
}

OrientedPlaned gauss_plane(const Immersion& surface, const Eigen::VectorXd& p) {
  OrientedPlaned tangent = plane_from_frame(tangent_frame(surface, p));
  if (uses_normal_planes(surface)) return normal_plane(tangent);
  return tangent;
}

}  // namespace skewbrane
