#pragma once

// Sufficient size of a perturbation parameter ε for f + εg + ε²h > 0, from
// sampled values of f ≥ 0, g (positive where f vanishes) and h.

#include <limits>
#include <span>
#include <string>
#include <vector>

namespace skewbrane {

/// Absolute ceiling on any perturbation parameter.
inline constexpr double kEpsCap = 0.1;

struct EpsilonBudget {
  double a = 0.0;    ///< half of min g on the approximate zero locus of f
  double C = 0.0;    ///< max |g|
  double b = 0.0;    ///< max |h|
  double eta = 0.0;  ///< zero-locus threshold actually used
  double eps_max = 0.0;     ///< min(a, C)/b, +∞ when b = 0
  double eps_cap = kEpsCap;
  double eps_usable = 0.0;  ///< min(eps_max, eps_cap)
  long zero_locus_size = 0;
  std::string method = "sampled-bound";
  std::vector<std::string> notes;
};

/// Budget from grid samples. `eta` < 0 selects the default threshold: twice the
/// largest jump of f between consecutive samples.
///
/// Throws ContractError on mismatched sizes or f < 0 (beyond −1e−12), and
/// HypothesisViolation when g ≤ 0 somewhere on {f ≤ η}.
EpsilonBudget epsilon_bound(std::span<const double> f, std::span<const double> g,
                            std::span<const double> h, double eta = -1.0,
                            double eps_cap = kEpsCap);

}  // namespace skewbrane
