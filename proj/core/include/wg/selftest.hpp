#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wg {

struct SelfTestResult {
  std::string suite;
  bool passed = false;
  std::string detail;  // first counterexample, or a short note
  double seconds = 0.0;
};

struct SelfTestOptions {
  // Caps the degree each suite runs at (each suite also has its own cap).
  int level = 4;
  std::uint64_t seed = 0x5eedba5eULL;
  // When set, character snapshot files found there are re-verified.
  std::string cache_dir;
};

inline constexpr int kMaxSelfTestLevel = 6;

// Runs the identity suites (character orthogonality, zonal and twisted
// spherical orthogonality/completeness, delta-sum power identities, Jack vs
// Schur consistency, integrator sum rules, optional cache integrity) and
// reports one result per suite. level > 6 is an unsupported scale.
std::vector<SelfTestResult> run_selftests(const SelfTestOptions& options);

}  // namespace wg
