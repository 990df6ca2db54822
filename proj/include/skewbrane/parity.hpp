#pragma once

// Decomposition of a function into isotypic parts under a finite symmetry
// group: the antipode on spheres, ℤ₂² = ⟨S₁, S₂⟩ on the 2-torus with
// S₁(α,β) = (α+π,β) and S₂(α,β) = (α,β+π).

#include "skewbrane/domain.hpp"

#include <Eigen/Dense>

#include <functional>

namespace skewbrane {

using ScalarField = std::function<double(const Eigen::VectorXd&)>;

struct ParityParts {
  DomainKind kind = DomainKind::kSphere;
  ScalarField even;  ///< sphere: f_ev
  ScalarField odd;   ///< sphere: f_odd
  /// torus: part[i][j] = f^{i,j}, changing sign by (−1)^i under S₁ and (−1)^j under S₂
  ScalarField part[2][2];

  /// Sum of the parts at p.
  double sum(const Eigen::VectorXd& p) const;
};

/// Group averaging. Throws ContractError for domains other than spheres and
/// the 2-torus.
ParityParts parity_decompose(ScalarField f, const ParamDomain& domain);

/// Images of p under S₁, S₂ and S₁S₂ (index 1, 2, 3; index 0 is p).
Eigen::Vector2d torus_action(int element, const Eigen::Vector2d& p);

}  // namespace skewbrane
