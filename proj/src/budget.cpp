#include "skewbrane/budget.hpp"

#include "skewbrane/errors.hpp"

#include <algorithm>
#include <cmath>

namespace skewbrane {

EpsilonBudget epsilon_bound(std::span<const double> f, std::span<const double> g,
                            std::span<const double> h, double eta, double eps_cap) {
  if (f.size() != g.size() || f.size() != h.size() || f.empty()) {
    throw ContractError("epsilon_bound: f, g, h must be non-empty samples of equal length");
  }
  EpsilonBudget out;
  out.eps_cap = eps_cap;

  if (eta < 0.0) {
    double jump = 0.0;
    for (size_t i = 1; i < f.size(); ++i) jump = std::max(jump, std::abs(f[i] - f[i - 1]));
    eta = 2.0 * jump;
  }
  out.eta = eta;

  double min_on_zero = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i] < -1e-12) {
      throw ContractError("epsilon_bound: f must be nonnegative, f = " + std::to_string(f[i]) +
                          " at sample " + std::to_string(i));
    }
    out.C = std::max(out.C, std::abs(g[i]));
    out.b = std::max(out.b, std::abs(h[i]));
    if (f[i] <= eta) {
      ++out.zero_locus_size;
      if (g[i] <= 0.0) {
        throw HypothesisViolation("epsilon_bound: g = " + std::to_string(g[i]) +
                                  " <= 0 on the zero locus of f (sample " + std::to_string(i) + ")");
      }
      min_on_zero = std::min(min_on_zero, g[i]);
    }
  }

  if (out.zero_locus_size == 0) {
    out.a = out.C;
    out.notes.push_back("zero locus of f is empty on the grid; a set to C");
  } else {
    out.a = 0.5 * min_on_zero;
  }
  out.eps_max = out.b > 0.0 ? std::min(out.a, out.C) / out.b : std::numeric_limits<double>::infinity();
  out.eps_usable = std::min(out.eps_max, eps_cap);
  return out;
}

}  // namespace skewbrane
