#pragma once

#include "itm/map.hpp"
#include "itm/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace itm {

// Parameters of a sampling campaign over three-piece maps with
// coordinates on the grid of multiples of 1/denominator.
struct SampleConfig {
  std::uint64_t seed = 0;
  long long count = 1;
  long long denominator = 64;
  int threads = 1;
};

// One sampled map pushed through the reduction pipeline. steps is the
// image-chain fixpoint step count when the terminal verdict is finite and
// -1 otherwise; escape_index is zero unless the label is B_i or C_i.
struct TrialResult {
  long long trial = 0;
  Rational beta1;
  Rational beta2;
  Rational gamma1;
  Rational gamma2;
  Rational gamma3;
  std::string case_label;
  int escape_index = 0;
  std::string verdict;
  long long steps = -1;
};

struct ExperimentReport {
  std::uint64_t seed = 0;
  long long sample_count = 0;
  long long denominator_bound = 0;
  std::vector<TrialResult> trials;
  std::map<std::string, long long> case_counts;
  std::map<std::string, long long> verdict_counts;
  std::map<int, long long> escape_index_histogram;
  std::map<long long, long long> fixpoint_steps_histogram;
};

// The map sampled for one trial: uniform over valid three-piece maps on
// the (1/denominator)-grid, by rejection. A fixed function of (seed,
// trial, denominator), independent of execution order and thread count.
Map sample_map3(std::uint64_t seed, long long trial, long long denominator);

// Runs count trials, possibly across threads; the report is a pure
// function of (seed, count, denominator). Requires count >= 1,
// denominator >= 4, threads >= 1.
ExperimentReport run_campaign(const SampleConfig& config);

// Aggregate counts only; trial rows live in the CSV.
std::string report_json(const ExperimentReport& report);

// Header plus one row per trial:
// seed,trial,beta_1,beta_2,gamma_1,gamma_2,gamma_3,case,escape_index,verdict,steps
std::string report_csv(const ExperimentReport& report);

}  // namespace itm
