#pragma once

// Built-in surfaces addressable by name with JSON parameter overrides:
//
//   torus0           standard torus T₀²
//   skew-torus       eps (default: half the budget), delta = 0.1
//   sphere-m0        eps = 0, harmonics = [{k:2,sin:1},{k:4,sin:1}]
//   skew-imm-sphere  same family, eps = 0.02
//   skew-sphere3     eps = 0.01, n = 2, a = [1..n]
//   graph-sphere     amplitude = 0.1, terms = 6, seed = 1
//
// Unknown names and parameters raise ConfigError before anything is built.

#include "skewbrane/budget.hpp"
#include "skewbrane/hopf.hpp"
#include "skewbrane/immersion.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace skewbrane {

struct SurfaceSpec {
  std::string kind;
  nlohmann::json params = nlohmann::json::object();

  /// Accepts {"kind": ..., "params": {...}} or a bare name string.
  static SurfaceSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

struct BuiltSurface {
  Immersion surface;
  nlohmann::json resolved_params;          ///< every parameter, defaults filled in
  std::optional<EpsilonBudget> budget;     ///< families with a perturbation budget
  std::optional<SkewSphere> skew_sphere;   ///< cylinder-section families
};

std::vector<std::string> surface_names();

/// Throws ConfigError for an unknown kind, unknown key or mistyped value, and
/// BudgetError / ContractError from the builders.
BuiltSurface build_surface(const SurfaceSpec& spec);

/// Validation only (no construction).
void validate_surface_spec(const SurfaceSpec& spec);

/// Uniform double in [0,1) from the top 53 bits of one draw. Unlike the
/// standard distributions, the sequence is the same on every platform.
double unit_double(std::mt19937_64& rng);

/// Graph of a random trigonometric function over the round S² ⊂ ℝ³:
///   x ↦ (x, amplitude · Σ_t c_t sin(k_t·x + φ_t)),
/// with integer frequency vectors k_t ∈ {−2..2}³ \ {0}, c_t ∈ [−1,1] and
/// φ_t ∈ [0,2π) drawn from mt19937_64(seed).
Immersion build_graph_sphere(double amplitude, int terms, std::uint64_t seed);

}  // namespace skewbrane
