#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace zetalaw {

inline constexpr const char* kVersion = "0.1.0";

enum class Subcommand { densities, euler, converge, gauss, sample };
enum class OutputFormat { csv, json };

const char* subcommand_name(Subcommand c);

// One experiment invocation. Identical configs (seed and workers included)
// must produce byte-identical reports, except for the timestamp, which the
// renderers keep on a line/key of its own.
struct ExperimentConfig {
  Subcommand subcommand = Subcommand::densities;
  std::uint64_t n = 0;
  std::uint32_t m = 2;
  double s = 2.0;
  std::uint64_t samples = 0;
  std::uint64_t prime_limit = 0;
  std::uint32_t inner_terms = 64;
  std::uint64_t support_limit = 0;
  std::uint64_t seed = 1;
  std::uint32_t workers = 1;
  OutputFormat format = OutputFormat::csv;
  std::string output_path;  // empty: stdout
};

/// Rejects out-of-range parameters with a message naming the flag.
void validate_config(const ExperimentConfig& config);

struct ResultRow {
  std::string experiment;
  std::uint64_t param_n = 0;
  std::uint32_t param_m = 0;
  double param_s = 0.0;
  std::string method;
  double value = 0.0;
  // NaN (the default) marks "not a sampled quantity" and renders as an
  // empty stderr column.
  double std_error = std::numeric_limits<double>::quiet_NaN();
  std::string trunc_meta;     // truncation / sample-size provenance
  std::uint64_t seed = 0;
};

struct Report {
  ExperimentConfig config;
  std::string timestamp;  // ISO-8601 UTC
  std::vector<ResultRow> rows;
};

/// Runs the configured experiment; Monte Carlo work is split across
/// `workers` deterministic substreams of the seed.
Report run_experiment(const ExperimentConfig& config);

std::string render_csv(const Report& report);
std::string render_json(const Report& report);

/// Renders in the configured format.
std::string render(const Report& report);

}  // namespace zetalaw
