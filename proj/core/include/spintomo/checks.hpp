#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spintomo {

/// One verification check: an identity evaluated numerically, the tolerance
/// it must meet, and the observed error.
struct CheckResult {
  std::string name;
  int criterion = 0;  // acceptance criterion the check belongs to; 0 = supplementary
  double tolerance = 0.0;
  double observed = 0.0;
  bool pass = false;
  /// False for identities that are measured and reported but cannot hold
  /// pointwise (the phase-integral quantizer differs from the tensor-form
  /// one for j >= 1); their failure is intrinsic, not a regression.
  bool attainable = true;
  std::string note;
  double seconds = 0.0;
};

struct CheckOptions {
  std::uint64_t seed = 1;
  int oversample = 1;
  /// Multiplies every quantizer used in reconstruction-type integrals;
  /// values != 1 deliberately break the biorthogonality identities
  /// (sensitivity self-test).
  double quantizer_scale = 1.0;
  /// When positive, replaces every check tolerance.
  double tolerance_override = 0.0;
};

/// Runs the full identity suite (deterministic for a fixed seed and thread
/// count) and reports per-check results.
std::vector<CheckResult> run_all_checks(const CheckOptions& options = {});

/// Strict: every check passed, attainable or not.
bool all_passed(const std::vector<CheckResult>& results);
/// Every attainable check passed (the CLI verify exit criterion).
bool attainable_passed(const std::vector<CheckResult>& results);

/// Machine-readable report for the CLI contract. Deterministic for a fixed
/// (seed, thread count): timings are deliberately excluded.
std::string checks_report_json(const std::vector<CheckResult>& results,
                               const CheckOptions& options);

}  // namespace spintomo
