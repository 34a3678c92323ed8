#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "zetalaw/report.hpp"

namespace {

void add_common_options(CLI::App* cmd, zetalaw::ExperimentConfig& cfg, std::string& format) {
  cmd->add_option("--seed", cfg.seed, "RNG seed")
      ->envname("ZETALAW_SEED")
      ->capture_default_str();
  cmd->add_option("--workers", cfg.workers, "Monte Carlo worker substreams")
      ->capture_default_str();
  cmd->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--output", cfg.output_path, "report file (default: stdout)");
}

int emit(const zetalaw::ExperimentConfig& cfg) {
  const zetalaw::Report report = zetalaw::run_experiment(cfg);
  const std::string text = zetalaw::render(report);
  if (cfg.output_path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return 0;
  }
  std::ofstream out(cfg.output_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << cfg.output_path << "\n";
    return 2;
  }
  out << text;
  return out.good() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zeta-law experiments: arithmetic densities, Euler products,\n"
               "convergence diagnostics, and Gaussian-integer coprimality."};
  app.require_subcommand(1);

  zetalaw::ExperimentConfig cfg;
  cfg.support_limit = 100000;
  std::string format = "csv";

  CLI::App* densities =
      app.add_subcommand("densities", "Exact and Monte Carlo coprime / m-free densities");
  densities->add_option("--n", cfg.n, "range upper bound {1..n}")->required();
  densities->add_option("--m", cfg.m, "tuple size and radical power")->capture_default_str();
  densities->add_option("--samples", cfg.samples, "Monte Carlo draws (0: exact only)")
      ->capture_default_str();
  add_common_options(densities, cfg, format);

  CLI::App* euler =
      app.add_subcommand("euler", "Euler products and Dirichlet series for built-in specs");
  euler->add_option("--s", cfg.s, "exponent of the Dirichlet series")->capture_default_str();
  euler->add_option("--prime-limit", cfg.prime_limit, "truncate products at this prime bound")
      ->required();
  euler->add_option("--inner-terms", cfg.inner_terms, "per-prime inner series terms")
      ->capture_default_str();
  add_common_options(euler, cfg, format);

  CLI::App* converge = app.add_subcommand(
      "converge", "Total variation of gcd/radical laws against the Zeta law");
  converge->add_option("--n", cfg.n, "largest uniform range in the grid")->required();
  converge->add_option("--m", cfg.m, "tuple size and radical power")->capture_default_str();
  converge->add_option("--support-limit", cfg.support_limit,
                       "truncation of the Zeta pmf support")
      ->capture_default_str();
  add_common_options(converge, cfg, format);

  CLI::App* gauss =
      app.add_subcommand("gauss", "Gaussian-integer coprimality experiment on N(z) <= n^2");
  gauss->add_option("--n", cfg.n, "ball radius")->required();
  gauss->add_option("--samples", cfg.samples, "gcd sample pairs")->required();
  add_common_options(gauss, cfg, format);

  CLI::App* sample = app.add_subcommand("sample", "Draw from the Zeta(s) law and summarize");
  sample->add_option("--s", cfg.s, "law parameter (> 1.01)")->capture_default_str();
  sample->add_option("--samples", cfg.samples, "number of draws")->required();
  sample->add_option("--support-limit", cfg.support_limit,
                     "truncation for the empirical-vs-exact comparison")
      ->capture_default_str();
  add_common_options(sample, cfg, format);

  CLI11_PARSE(app, argc, argv);

  if (densities->parsed()) cfg.subcommand = zetalaw::Subcommand::densities;
  else if (euler->parsed()) cfg.subcommand = zetalaw::Subcommand::euler;
  else if (converge->parsed()) cfg.subcommand = zetalaw::Subcommand::converge;
  else if (gauss->parsed()) cfg.subcommand = zetalaw::Subcommand::gauss;
  else cfg.subcommand = zetalaw::Subcommand::sample;
  cfg.format = format == "json" ? zetalaw::OutputFormat::json : zetalaw::OutputFormat::csv;

  try {
    return emit(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
