#pragma once

// End-to-end checks of the explicit constructions. Each target runs its
// construction, scans and linearised residuals and records one sub-check per
// claim, with the measured value and the tolerance it was held to.

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace skewbrane {

struct SubCheck {
  std::string name;
  double value = 0.0;
  std::string expected;
  bool pass = false;
};

struct VerifyResult {
  std::string target;
  std::vector<SubCheck> checks;
  nlohmann::json details = nlohmann::json::object();
  double seconds = 0.0;  ///< wall time, left out of the JSON form

  bool pass() const;
  /// Names of failing sub-checks.
  std::vector<std::string> failures() const;
};

struct VerifyOptions {
  int threads = 1;
  std::uint64_t seed = 1;
  /// Grid resolution override for the pair scans; 0 keeps each target's default.
  int resolution = 0;
  /// grad5 cube-sphere resolution; 93 gives 8·93³ ≈ 6.4·10⁶ ≥ 50⁴ samples.
  int grad5_resolution = 93;
};

/// skew-torus, skew-sphere3, imm-sphere2, torus0-orbits, m0-family
std::vector<std::string> verify_targets();

/// Throws ConfigError for an unknown target.
VerifyResult run_verify(const std::string& target, const VerifyOptions& opt = {});

nlohmann::json to_json(const SubCheck& c);
nlohmann::json to_json(const VerifyResult& r);

}  // namespace skewbrane
