#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace weilrep {

struct VerifyConfig {
  int p = 3;
  int n = 2;  ///< largest half-dimension exercised
  std::uint64_t seed = 0;
  int trials = 50;
  double tolerance = 1e-8;       ///< proportionality and cocycle residuals
  double exact_tolerance = 1e-9; ///< residuals of identities that hold exactly
};

struct PropertyResult {
  std::string suite;
  std::string name;
  bool passed = true;
  double max_residual = 0.0;
  double threshold = 0.0;
  int trials = 0;
  std::string detail;  ///< first failure, replayable from its trial index
};

struct VerifyReport {
  VerifyConfig config;
  std::vector<PropertyResult> properties;
  bool passed() const;
};

/// heisenberg | group | relations | functor | gaussian | all. Trial i draws
/// from Rng::stream(seed, i), so a failure is replayable on its own.
/// Throws ValidationError for an unknown suite.
VerifyReport run_verify(const std::string& suite, const VerifyConfig& config);

const std::vector<std::string>& verify_suites();

}  // namespace weilrep
