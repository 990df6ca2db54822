#pragma once

// Perturbations of the Clifford torus T₀² ⊂ ℝ⁴:
//   (α,β) ↦ (u cos α, u sin α, v cos β, v sin β),  u = 1+εf, v = 1+εg.

#include "skewbrane/budget.hpp"
#include "skewbrane/immersion.hpp"

#include <Eigen/Dense>

#include <array>
#include <vector>

namespace skewbrane {

/// c·cos(pα+qβ) + s·sin(pα+qβ)
struct TrigTerm {
  int p = 0;
  int q = 0;
  double c = 0.0;
  double s = 0.0;
};

/// Finite trigonometric sum on the 2-torus with exact derivatives.
class TrigSeries {
 public:
  TrigSeries() = default;
  explicit TrigSeries(std::vector<TrigTerm> terms) : terms_(std::move(terms)) {}

  const std::vector<TrigTerm>& terms() const { return terms_; }
  TrigSeries operator+(const TrigSeries& o) const;
  TrigSeries operator*(double k) const;

  double value(double alpha, double beta) const;
  double d_alpha(double alpha, double beta) const;
  double d_beta(double alpha, double beta) const;

 private:
  std::vector<TrigTerm> terms_;
};

struct TorusFunctions {
  TrigSeries f;
  TrigSeries g;
};

/// f = cos(2α+2β) + δ·cos(α+2β), g = sin(2α+2β) + 2δ·sin(α+2β).
TorusFunctions skew_torus_functions(double delta);

/// (f_β)² + (g_α)² at (α,β).
double torus_identity(const TorusFunctions& fg, double alpha, double beta);

/// Perturbed torus with analytic Jacobian (no budget check).
Immersion build_perturbed_torus(double eps, const TorusFunctions& fg, const std::string& name,
                                Params params = {});

struct TorusResiduals {
  /// Per system (index 0,1,2 for the S₁, S₂, S₁S₂ partner): min over the grid
  /// of max(|first residual|, |second residual|) in the parity-part form.
  std::array<double, 3> min_max{};
  /// Same with the Euclidean norm of the two residuals.
  std::array<double, 3> min_norm{};
  std::array<Eigen::Vector2d, 3> argmin{};
  int resolution = 0;
};

/// Linearised conditions for a parallel partner near each ℤ₂² image:
///   S₁:   f_β^{0,0}+f_β^{0,1},  g_α^{0,0}+g_α^{0,1}
///   S₂:   f_β^{0,0}+f_β^{1,0},  g_α^{0,0}+g_α^{1,0}
///   S₁S₂: f_β^{1,0}+f_β^{0,1},  g_α^{1,0}+g_α^{0,1}
/// Parity parts come from group averaging of f_β and g_α.
TorusResiduals torus_linearized_residuals(const TorusFunctions& fg, int resolution);

/// Budget for the three partner systems. With x₁ = εA + ε²A₂ and
/// y₁ = εB + ε²B₂ the exact rotated coordinates of the (∂_α, ∂_β) wedge, each
/// system contributes the first-order gap |w₁| and second-order size |w₂|; g
/// is the smallest gap and h the largest second-order term over active
/// systems. Systems whose gap vanishes identically are excluded and noted.
/// Throws HypothesisViolation when no system is active or a gap has a zero.
EpsilonBudget torus_epsilon_budget(const TorusFunctions& fg, int resolution = 128,
                                   double eps_cap = kEpsCap);

struct SkewTorus {
  TorusFunctions functions;
  double eps = 0.0;
  double delta = 0.0;
  EpsilonBudget budget;
  Immersion surface;
};

/// Requires δ ∈ (0,1) and 0 ≤ ε ≤ budget; throws ContractError / BudgetError.
SkewTorus build_skew_torus(double eps, double delta);

/// Standard torus T₀² (ε = 0).
Immersion build_torus0();

}  // namespace skewbrane
