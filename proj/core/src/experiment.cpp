#include "itm/experiment.hpp"

#include "itm/errors.hpp"
#include "itm/reduction.hpp"
#include "itm/typing.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <random>
#include <thread>
#include <utility>
#include <variant>

namespace itm {
namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, long long trial) {
  std::uint64_t state =
      seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial + 1);
  return splitmix64(state);
}

// Uniform draw from [0, n) by rejection; engine-output order is fixed, so
// results do not depend on the standard library's distribution details.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  while (true) {
    const std::uint64_t r = rng();
    if (r >= threshold) {
      return r % n;
    }
  }
}

// Nonzero numerator in [-(q-1), q-1].
long long signed_numerator(std::mt19937_64& rng, long long q) {
  const std::uint64_t v = bounded(rng, 2 * static_cast<std::uint64_t>(q - 1));
  const long long magnitude = static_cast<long long>(v % (q - 1)) + 1;
  return v < static_cast<std::uint64_t>(q - 1) ? magnitude : -magnitude;
}

TrialResult run_trial(const SampleConfig& config, long long trial) {
  const Map map = sample_map3(config.seed, trial, config.denominator);
  const ReductionTrace trace = reduce_pipeline(map);

  TrialResult result;
  result.trial = trial;
  result.beta1 = map.breakpoint(1);
  result.beta2 = map.breakpoint(2);
  result.gamma1 = map.translation(0);
  result.gamma2 = map.translation(1);
  result.gamma3 = map.translation(2);
  if (trace.label) {
    result.case_label = to_string(*trace.label);
    result.escape_index = trace.label->step;
  } else {
    result.case_label = "rotation";
  }
  if (!trace.terminal_type) {
    result.verdict = "boundary_stop";
  } else if (const auto* finite =
                 std::get_if<FiniteType>(&*trace.terminal_type)) {
    result.verdict = "finite";
    result.steps = finite->steps;
  } else {
    result.verdict = "undecided";
  }
  return result;
}

}  // namespace

Map sample_map3(std::uint64_t seed, long long trial, long long denominator) {
  const long long q = denominator;
  if (q < 4) {
    throw PreconditionError("sample_map3 requires denominator >= 4");
  }
  std::mt19937_64 rng(trial_seed(seed, trial));
  while (true) {
    const long long b1 =
        1 + static_cast<long long>(bounded(rng, static_cast<std::uint64_t>(q - 1)));
    const long long b2 =
        1 + static_cast<long long>(bounded(rng, static_cast<std::uint64_t>(q - 1)));
    const long long g1 = signed_numerator(rng, q);
    const long long g2 = signed_numerator(rng, q);
    const long long g3 = signed_numerator(rng, q);
    if (b1 >= b2) {
      continue;
    }
    if (g1 < 0 || b1 + g1 > q) {
      continue;
    }
    if (b1 + g2 < 0 || b2 + g2 > q) {
      continue;
    }
    if (b2 + g3 < 0 || g3 > 0) {
      continue;
    }
    return Map({Rational(b1, q), Rational(b2, q)},
               {Rational(g1, q), Rational(g2, q), Rational(g3, q)});
  }
}

ExperimentReport run_campaign(const SampleConfig& config) {
  if (config.count < 1) {
    throw PreconditionError("run_campaign requires count >= 1");
  }
  if (config.denominator < 4) {
    throw PreconditionError("run_campaign requires denominator >= 4");
  }
  if (config.threads < 1) {
    throw PreconditionError("run_campaign requires threads >= 1");
  }

  ExperimentReport report;
  report.seed = config.seed;
  report.sample_count = config.count;
  report.denominator_bound = config.denominator;
  report.trials.resize(static_cast<std::size_t>(config.count));

  const int worker_count = static_cast<int>(
      std::min<long long>(config.threads, config.count));
  std::atomic<long long> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    while (true) {
      const long long trial = next.fetch_add(1);
      if (trial >= config.count) {
        return;
      }
      try {
        report.trials[static_cast<std::size_t>(trial)] =
            run_trial(config, trial);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
      }
    }
  };
  if (worker_count == 1) {
    worker();
  } else {
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(worker_count));
    for (int i = 0; i < worker_count; ++i) {
      workers.emplace_back(worker);
    }
    for (std::thread& w : workers) {
      w.join();
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }

  report.verdict_counts["finite"] = 0;
  report.verdict_counts["undecided"] = 0;
  report.verdict_counts["boundary_stop"] = 0;
  for (const TrialResult& trial : report.trials) {
    ++report.case_counts[trial.case_label];
    ++report.verdict_counts[trial.verdict];
    if (trial.case_label.rfind("B_", 0) == 0 ||
        trial.case_label.rfind("C_", 0) == 0) {
      ++report.escape_index_histogram[trial.escape_index];
    }
    if (trial.verdict == "finite") {
      ++report.fixpoint_steps_histogram[trial.steps];
    }
  }
  return report;
}

std::string report_json(const ExperimentReport& report) {
  using Json = nlohmann::ordered_json;
  Json node;
  node["sample_count"] = report.sample_count;
  node["seed"] = report.seed;
  node["denominator_bound"] = report.denominator_bound;
  node["case_counts"] = Json::object();
  for (const auto& [label, count] : report.case_counts) {
    node["case_counts"][label] = count;
  }
  node["verdict_counts"] = Json::object();
  for (const auto& [verdict, count] : report.verdict_counts) {
    node["verdict_counts"][verdict] = count;
  }
  node["escape_index_histogram"] = Json::object();
  for (const auto& [index, count] : report.escape_index_histogram) {
    node["escape_index_histogram"][std::to_string(index)] = count;
  }
  node["fixpoint_steps_histogram"] = Json::object();
  for (const auto& [steps, count] : report.fixpoint_steps_histogram) {
    node["fixpoint_steps_histogram"][std::to_string(steps)] = count;
  }
  return node.dump();
}

std::string report_csv(const ExperimentReport& report) {
  std::string out =
      "seed,trial,beta_1,beta_2,gamma_1,gamma_2,gamma_3,case,escape_index,"
      "verdict,steps\n";
  for (const TrialResult& trial : report.trials) {
    out += std::to_string(report.seed);
    out += ',';
    out += std::to_string(trial.trial);
    out += ',';
    out += format_rational(trial.beta1);
    out += ',';
    out += format_rational(trial.beta2);
    out += ',';
    out += format_rational(trial.gamma1);
    out += ',';
    out += format_rational(trial.gamma2);
    out += ',';
    out += format_rational(trial.gamma3);
    out += ',';
    out += trial.case_label;
    out += ',';
    out += std::to_string(trial.escape_index);
    out += ',';
    out += trial.verdict;
    out += ',';
    out += std::to_string(trial.steps);
    out += '\n';
  }
  return out;
}

}  // namespace itm
