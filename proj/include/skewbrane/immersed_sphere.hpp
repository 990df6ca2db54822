#pragma once

// Immersed spheres in ℝ⁴ with one double point:
//   (α,h) ↦ (1−h²)(cos α, sin α, h cos α − ε g(α) sin α, h sin α + ε g(α) cos α).
// ε = 0 gives M₀, whose two poles both map to the origin.

#include "skewbrane/grassmann.hpp"
#include "skewbrane/immersion.hpp"

#include <vector>

namespace skewbrane {

/// s·sin(kα) + c·cos(kα)
struct Harmonic {
  int k = 0;
  double s = 0.0;
  double c = 0.0;
};

class GProfile {
 public:
  GProfile() = default;
  explicit GProfile(std::vector<Harmonic> terms) : terms_(std::move(terms)) {}
  /// sin 2α + sin 4α
  static GProfile standard();

  const std::vector<Harmonic>& terms() const { return terms_; }
  double value(double alpha) const;
  double derivative(double alpha) const;

 private:
  std::vector<Harmonic> terms_;
};

/// Immersion on the cylinder-sphere with analytic Jacobian and pole limit
/// frames. Throws ContractError for ε < 0.
Immersion build_immersed_sphere(double eps, const GProfile& g = GProfile::standard());

/// M₀.
Immersion build_m0();

/// First-order closed forms of the rotated Plücker coordinates of the frame
/// (∂_αF/(1−h²), ∂_hF), unnormalised:
///   x₁ = h(1+3h²) − ε(1−3h²)g′,   x₂ = cos 2α·((1−h²) + 2εhg′),
///   x₃ = sin 2α·((1−h²) + 2εhg′), y₁ = 3h(1−h²) + ε(1−3h²)g′,
///   y₂ = (1−5h²) − 2εhg′,         y₃ = 4εhg.
PluckerXY plcoord_formula(double alpha, double h, double eps, const GProfile& g);

/// The same coordinates computed from the wedge of the analytic frame.
PluckerXY plcoord_computed(double alpha, double h, double eps, const GProfile& g);

struct ImmersedSphereResidual {
  double min_max = 0.0;  ///< min over α and both β branches of max(|g(β)−g(α)|, |g′(β)+g′(α)|)
  double argmin_alpha = 0.0;
  double argmin_beta = 0.0;
  int resolution = 0;
};

/// Linearised negative-parallel conditions g(β) = g(α), g′(β) = −g′(α) with
/// 2β = 2α + π, minimised over an α grid of the given size.
ImmersedSphereResidual immersed_sphere_linearized_residual(const GProfile& g, int resolution);

}  // namespace skewbrane
