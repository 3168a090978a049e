#include "itm/errors.hpp"
#include "itm/experiment.hpp"
#include "itm/map.hpp"
#include "itm/reduction.hpp"
#include "itm/render.hpp"
#include "itm/serialize.hpp"
#include "itm/typing.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitBoundary = 2;
constexpr int kExitUndecided = 3;
constexpr int kExitUsage = 64;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw std::invalid_argument("cannot read input file: " + path);
  }
  return std::string(std::istreambuf_iterator<char>(file),
                     std::istreambuf_iterator<char>());
}

void emit(const std::string& out_path, bool quiet, std::string content) {
  if (!content.empty() && content.back() != '\n') {
    content += '\n';
  }
  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      throw std::invalid_argument("cannot write output file: " + out_path);
    }
    file << content;
    if (!file) {
      throw std::runtime_error("failed writing output file: " + out_path);
    }
  } else if (!quiet) {
    std::cout << content;
  }
}

struct ReduceOptions {
  std::string input;
  std::string out;
  bool trace = false;
  bool quiet = false;
};

struct DetectOptions {
  std::string input;
  std::string out;
  long long max_steps = 0;
  long long max_pieces = 0;
  bool quiet = false;
};

struct SampleOptions {
  std::uint64_t seed = 0;
  long long count = 1;
  long long den_bound = 64;
  int threads = 1;
  std::string format = "json";
  std::string out;
  bool quiet = false;
};

struct RenderOptions {
  std::string input;
  std::string out;
};

int run_reduce(const ReduceOptions& options) {
  const itm::Map map = itm::map_from_json(read_input(options.input));
  const itm::ReductionTrace trace = itm::reduce_pipeline(map);
  if (options.trace) {
    std::cerr << itm::pretty_trace(trace);
  }
  emit(options.out, options.quiet, itm::to_json(trace));
  if (std::holds_alternative<itm::BoundaryStop>(trace.terminal)) {
    return kExitBoundary;
  }
  if (trace.terminal_type && !itm::is_finite(*trace.terminal_type)) {
    return kExitUndecided;
  }
  return kExitOk;
}

int run_detect(const DetectOptions& options) {
  const itm::Map map = itm::map_from_json(read_input(options.input));
  const long long budget = options.max_steps > 0
                               ? options.max_steps
                               : itm::default_type_budget(map);
  const std::size_t cap = options.max_pieces > 0
                              ? static_cast<std::size_t>(options.max_pieces)
                              : itm::kDefaultPieceCap;
  const itm::TypeVerdict verdict = itm::detect_type(map, budget, cap);
  emit(options.out, options.quiet, itm::to_json(verdict));
  return itm::is_finite(verdict) ? kExitOk : kExitUndecided;
}

int run_sample(const SampleOptions& options) {
  itm::SampleConfig config;
  config.seed = options.seed;
  config.count = options.count;
  config.denominator = options.den_bound;
  config.threads = options.threads;
  const itm::ExperimentReport report = itm::run_campaign(config);
  emit(options.out, options.quiet,
       options.format == "csv" ? itm::report_csv(report)
                               : itm::report_json(report));
  return kExitOk;
}

int run_render(const RenderOptions& options) {
  const itm::Map map = itm::map_from_json(read_input(options.input));
  emit(options.out, false, itm::render_svg(map));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact interval translation maps: reduction traces, type detection, "
      "seeded sampling, SVG diagrams."};
  app.require_subcommand(1);

  ReduceOptions reduce_options;
  CLI::App* reduce =
      app.add_subcommand("reduce", "Run the reduction pipeline on a map");
  reduce
      ->add_option("input", reduce_options.input,
                   "Map JSON file, or - for stdin")
      ->required();
  reduce->add_option("--out", reduce_options.out, "Write the trace JSON here");
  reduce->add_flag("--trace", reduce_options.trace,
                   "Print a readable stage-by-stage trace to stderr");
  reduce->add_flag("--quiet", reduce_options.quiet,
                   "Suppress stdout output; rely on the exit code");

  DetectOptions detect_options;
  CLI::App* detect = app.add_subcommand(
      "detect", "Decide finite or infinite type by image iteration");
  detect
      ->add_option("input", detect_options.input,
                   "Map JSON file, or - for stdin")
      ->required();
  detect->add_option("--max-steps", detect_options.max_steps,
                     "Image iteration budget (default: 16 * grid denominator)")
      ->check(CLI::PositiveNumber);
  detect->add_option("--max-pieces", detect_options.max_pieces,
                     "Give up when an image has more pieces than this")
      ->check(CLI::PositiveNumber);
  detect->add_option("--out", detect_options.out,
                     "Write the verdict JSON here");
  detect->add_flag("--quiet", detect_options.quiet,
                   "Suppress stdout output; rely on the exit code");

  SampleOptions sample_options;
  CLI::App* sample = app.add_subcommand(
      "sample", "Reduce seeded random three-piece maps and aggregate");
  sample->add_option("--seed", sample_options.seed, "Campaign seed");
  sample->add_option("--count", sample_options.count, "Number of trials")
      ->check(CLI::PositiveNumber);
  sample
      ->add_option("--den-bound", sample_options.den_bound,
                   "Grid denominator for sampled coordinates")
      ->check(CLI::Range(4LL, static_cast<long long>(1) << 40));
  sample->add_option("--threads", sample_options.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  sample
      ->add_option("--format", sample_options.format,
                   "Report format: json aggregates or csv trial rows")
      ->check(CLI::IsMember({"json", "csv"}));
  sample->add_option("--out", sample_options.out, "Write the report here");
  sample->add_flag("--quiet", sample_options.quiet,
                   "Suppress stdout output");

  RenderOptions render_options;
  CLI::App* render =
      app.add_subcommand("render", "Draw a map as a deterministic SVG");
  render
      ->add_option("input", render_options.input,
                   "Map JSON file, or - for stdin")
      ->required();
  render->add_option("--out", render_options.out, "Write the SVG here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (reduce->parsed()) {
      return run_reduce(reduce_options);
    }
    if (detect->parsed()) {
      return run_detect(detect_options);
    }
    if (sample->parsed()) {
      return run_sample(sample_options);
    }
    return run_render(render_options);
  } catch (const itm::ValidationError& e) {
    std::cerr << "error: invalid map: " << e.what() << "\n";
    return kExitUsage;
  } catch (const itm::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
