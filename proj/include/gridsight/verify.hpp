#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gridsight {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifySettings {
  bool full = false;       // acceptance scale when true, desk scale otherwise
  long long max_p = 13;    // desk-scale cap on every prime grid
  std::size_t samples = 60;  // desk-scale cap on sampled sweeps
  int rays = 64;
  std::uint64_t seed = 8675309;
};

// Frozen after the recorded calibration run (tests/fixtures/calibration_log.txt).
inline constexpr double kMeanHeightC = 0.40;   // mean h_p <= C p^{2/3} ln p
inline constexpr double kAntichainC = 0.30;    // lattice antichain >= c p^{2/3}

// The thirteen acceptance checks, in order. Each runs at full scale when
// s.full, otherwise capped by max_p/samples.
std::vector<CheckResult> run_all_checks(const VerifySettings& s);

}  // namespace gridsight
