// Experiment driver: seeded trial campaigns over the full
// dealer -> user -> servers -> adversary -> decoder pipeline, and the
// golden regression pinned to the worked N=9, B=2, q=11 instance.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bspir/csa.hpp"
#include "bspir/dist.hpp"

namespace bspir {

struct RunConfig {
  int n = 9;
  int b = 2;
  int k = 1;
  std::optional<std::uint64_t> q;  // default: smallest prime >= N+L
  std::uint64_t seed = 0;
  std::string strategy = "random_noise";  // zoo name, or "all" to rotate
  std::optional<std::vector<int>> byz_set;  // default: sampled per trial
  std::uint64_t trials = 1000;
  bool fast = false;   // decoder stops at first consistent candidate
  int threads = 1;     // does not affect report bytes
};

struct StrategyCounts {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t byz_located = 0;  // decoded set covers the true support
};

struct TrialReport {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t byz_located = 0;
  Rational rate;  // L / N, unreduced
  std::vector<std::pair<std::string, StrategyCounts>> per_strategy;  // sorted
  std::vector<std::uint64_t> failed_trials;  // first few failing indices
  std::uint64_t seed = 0;
  RunConfig config;
};

TrialReport run_trials(const RunConfig& config);

// Deterministic JSON: sorted keys, exact rationals as {den, num}; identical
// seeds give byte-identical output regardless of thread count.
std::string report_to_json(const TrialReport& report);
void emit_report(const TrialReport& report, const std::string& path);

struct GoldenRecord {
  bool pass = false;
  std::vector<std::string> failures;           // offending entries, if any
  std::uint64_t wrong_candidate_consistent = 0;  // {2,3} coincidences over 121 deltas
  std::uint64_t cases = 0;
};

// Bit-exact regression against the worked example: CSA^{-1} columns 1-2,
// the {2,3} candidate matrices, and the full 121-delta candidate sweep.
GoldenRecord run_golden();
std::string golden_to_json(const GoldenRecord& record);

}  // namespace bspir
