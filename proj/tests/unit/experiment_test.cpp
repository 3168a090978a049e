#include "itm/experiment.hpp"

#include "doctest.h"
#include "itm/errors.hpp"
#include "itm/reduction.hpp"

#include <string>
#include <variant>

using itm::ExperimentReport;
using itm::Map;
using itm::SampleConfig;
using itm::TrialResult;

TEST_CASE("sampling is a pure function of seed, trial and denominator") {
  const Map first = itm::sample_map3(17, 3, 32);
  const Map again = itm::sample_map3(17, 3, 32);
  CHECK(first == again);

  bool saw_difference = false;
  for (long long trial = 0; trial < 8; ++trial) {
    if (!(itm::sample_map3(17, trial, 32) == first)) {
      saw_difference = true;
    }
  }
  CHECK(saw_difference);
}

TEST_CASE("samples are valid three-piece maps on the requested grid") {
  for (long long trial = 0; trial < 100; ++trial) {
    const Map map = itm::sample_map3(23, trial, 16);
    CHECK(map.piece_count() == 3);
    CHECK(itm::Int(16) % map.grid_denominator() == 0);
    CHECK(map.translation(0) > 0);
    CHECK(map.translation(2) < 0);
  }
  CHECK_THROWS_AS(itm::sample_map3(0, 0, 3), itm::PreconditionError);
}

TEST_CASE("campaign reports add up") {
  SampleConfig config;
  config.seed = 5;
  config.count = 60;
  config.denominator = 16;
  const ExperimentReport report = itm::run_campaign(config);

  CHECK(report.seed == 5);
  CHECK(report.sample_count == 60);
  CHECK(report.denominator_bound == 16);
  REQUIRE(report.trials.size() == 60);

  long long case_total = 0;
  for (const auto& [label, count] : report.case_counts) {
    CHECK(count > 0);
    case_total += count;
  }
  CHECK(case_total == 60);

  long long verdict_total = 0;
  long long finite_total = 0;
  for (const auto& [verdict, count] : report.verdict_counts) {
    verdict_total += count;
    if (verdict == "finite") {
      finite_total = count;
    }
  }
  CHECK(verdict_total == 60);
  CHECK(report.verdict_counts.count("finite") == 1);
  CHECK(report.verdict_counts.count("undecided") == 1);
  CHECK(report.verdict_counts.count("boundary_stop") == 1);

  long long steps_total = 0;
  for (const auto& [steps, count] : report.fixpoint_steps_histogram) {
    CHECK(steps >= 0);
    steps_total += count;
  }
  CHECK(steps_total == finite_total);

  long long escape_total = 0;
  for (const auto& [index, count] : report.escape_index_histogram) {
    CHECK(index >= 1);
    escape_total += count;
  }
  long long escape_labels = 0;
  for (const TrialResult& trial : report.trials) {
    CHECK(trial.beta1 < trial.beta2);
    if (trial.case_label.rfind("B_", 0) == 0 ||
        trial.case_label.rfind("C_", 0) == 0) {
      ++escape_labels;
    }
    CHECK((trial.verdict == "finite") == (trial.steps >= 0));
  }
  CHECK(escape_total == escape_labels);
}

TEST_CASE("trial rows agree with an independent rerun of the pipeline") {
  SampleConfig config;
  config.seed = 29;
  config.count = 30;
  config.denominator = 32;
  const ExperimentReport report = itm::run_campaign(config);
  for (const TrialResult& trial : report.trials) {
    const Map map = itm::sample_map3(config.seed, trial.trial,
                                     config.denominator);
    CHECK(map.breakpoint(1) == trial.beta1);
    CHECK(map.breakpoint(2) == trial.beta2);
    const itm::ReductionTrace trace = itm::reduce_pipeline(map);
    if (trace.label) {
      CHECK(itm::to_string(*trace.label) == trial.case_label);
      CHECK(trace.label->step == trial.escape_index);
    } else {
      CHECK(trial.case_label == "rotation");
    }
    if (!trace.terminal_type) {
      CHECK(trial.verdict == "boundary_stop");
    } else if (itm::is_finite(*trace.terminal_type)) {
      CHECK(trial.verdict == "finite");
      CHECK(std::get<itm::FiniteType>(*trace.terminal_type).steps ==
            trial.steps);
    } else {
      CHECK(trial.verdict == "undecided");
    }
  }
}

TEST_CASE("reports are byte-identical across thread counts and reruns") {
  SampleConfig config;
  config.seed = 31;
  config.count = 40;
  config.denominator = 16;
  config.threads = 1;
  const ExperimentReport serial = itm::run_campaign(config);
  config.threads = 4;
  const ExperimentReport parallel = itm::run_campaign(config);
  const ExperimentReport parallel_again = itm::run_campaign(config);

  CHECK(itm::report_json(serial) == itm::report_json(parallel));
  CHECK(itm::report_csv(serial) == itm::report_csv(parallel));
  CHECK(itm::report_csv(parallel) == itm::report_csv(parallel_again));
}

TEST_CASE("the CSV has a header and one row per trial") {
  SampleConfig config;
  config.seed = 7;
  config.count = 3;
  config.denominator = 8;
  const ExperimentReport report = itm::run_campaign(config);
  const std::string csv = itm::report_csv(report);

  CHECK(csv.rfind("seed,trial,beta_1,beta_2,gamma_1,gamma_2,gamma_3,case,"
                  "escape_index,verdict,steps\n",
                  0) == 0);
  std::size_t lines = 0;
  for (char c : csv) {
    if (c == '\n') {
      ++lines;
    }
  }
  CHECK(lines == 4);

  const TrialResult& first = report.trials[0];
  std::string expected = "7,0," + itm::format_rational(first.beta1) + "," +
                         itm::format_rational(first.beta2) + "," +
                         itm::format_rational(first.gamma1) + "," +
                         itm::format_rational(first.gamma2) + "," +
                         itm::format_rational(first.gamma3) + "," +
                         first.case_label + "," +
                         std::to_string(first.escape_index) + "," +
                         first.verdict + "," + std::to_string(first.steps) +
                         "\n";
  CHECK(csv.find(expected) != std::string::npos);
}

TEST_CASE("campaign parameters are validated up front") {
  SampleConfig config;
  config.count = 0;
  CHECK_THROWS_AS(itm::run_campaign(config), itm::PreconditionError);
  config.count = 1;
  config.denominator = 2;
  CHECK_THROWS_AS(itm::run_campaign(config), itm::PreconditionError);
  config.denominator = 64;
  config.threads = 0;
  CHECK_THROWS_AS(itm::run_campaign(config), itm::PreconditionError);
}
