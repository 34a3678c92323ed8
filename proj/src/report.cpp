#include "zetalaw/report.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <map>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "zetalaw/core.hpp"
#include "zetalaw/densities.hpp"
#include "zetalaw/gauss.hpp"
#include "zetalaw/pmf.hpp"
#include "zetalaw/rng.hpp"
#include "zetalaw/zeta.hpp"

namespace zetalaw {

namespace {

constexpr std::uint64_t kMaxSieve = std::uint64_t{1} << 31;
constexpr double kSeriesTol = 1e-13;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string iso_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<std::uint64_t> split_shares(std::uint64_t total, std::uint32_t workers) {
  std::vector<std::uint64_t> shares(workers, total / workers);
  for (std::uint64_t i = 0; i < total % workers; ++i) ++shares[i];
  return shares;
}

// Runs `body(worker_index, share, rng)` on every worker with a nonzero
// share, each on its own deterministic substream.
template <class Body>
void parallel_workers(std::uint64_t samples, std::uint32_t workers, std::uint64_t seed,
                      Body body) {
  const std::vector<std::uint64_t> shares = split_shares(samples, workers);
  if (workers == 1) {
    Rng rng = worker_rng(seed, 0);
    body(0, shares[0], rng);
    return;
  }
  std::vector<std::thread> pool;
  for (std::uint32_t w = 0; w < workers; ++w) {
    if (shares[w] == 0) continue;
    pool.emplace_back([w, &shares, seed, &body] {
      Rng rng = worker_rng(seed, w);
      body(w, shares[w], rng);
    });
  }
  for (std::thread& t : pool) t.join();
}

ResultRow base_row(const ExperimentConfig& c, std::string method, double value) {
  ResultRow row;
  row.experiment = subcommand_name(c.subcommand);
  row.param_n = c.n;
  row.param_m = c.m;
  row.param_s = c.s;
  row.method = std::move(method);
  row.value = value;
  row.seed = c.seed;
  return row;
}

std::string mc_meta(const ExperimentConfig& c) {
  return "samples=" + std::to_string(c.samples) + ";workers=" + std::to_string(c.workers);
}

void run_densities(const ExperimentConfig& c, std::vector<ResultRow>& rows) {
  const PrimeTable table = sieve(std::max<std::uint64_t>(c.n, 2));

  ResultRow coprime = base_row(c, "coprime_exact", coprime_density_exact(c.n, c.m, table));
  coprime.param_s = 0.0;
  coprime.trunc_meta = "exact";
  rows.push_back(coprime);

  ResultRow mfree = base_row(c, "mfree_exact", mfree_density_exact(c.n, c.m, table));
  mfree.param_s = 0.0;
  mfree.trunc_meta = "exact";
  rows.push_back(mfree);

  if (c.samples > 0) {
    std::vector<std::uint64_t> hits(c.workers, 0);
    parallel_workers(c.samples, c.workers, c.seed,
                     [&](std::uint32_t w, std::uint64_t share, Rng& rng) {
                       hits[w] = mc_coprime_successes(c.n, c.m, share, rng);
                     });
    std::uint64_t total = 0;
    for (std::uint64_t h : hits) total += h;
    const MonteCarloEstimate est = binomial_estimate(total, c.samples);
    ResultRow mc = base_row(c, "coprime_mc", est.value);
    mc.param_s = 0.0;
    mc.std_error = est.std_error;
    mc.trunc_meta = mc_meta(c);
    rows.push_back(mc);
  }
}

void run_euler(const ExperimentConfig& c, std::vector<ResultRow>& rows) {
  const PrimeTable table = sieve(c.prime_limit);
  const std::string tol_meta = "tolerance=" + fmt(kSeriesTol);
  const std::string prod_meta = "prime_limit=" + std::to_string(c.prime_limit) +
                                ";inner_terms=" + std::to_string(c.inner_terms);

  const double zeta_s = zeta_value(c.s, kSeriesTol);
  ResultRow zv = base_row(c, "zeta_value", zeta_s);
  zv.trunc_meta = tol_meta;
  rows.push_back(zv);

  ResultRow bv = base_row(c, "dirichlet_beta", dirichlet_beta(c.s, kSeriesTol));
  bv.trunc_meta = tol_meta;
  rows.push_back(bv);

  const double inv = euler_product_inv_zeta(c.s, table);
  ResultRow pr = base_row(c, "inv_zeta_product", inv);
  pr.trunc_meta = "prime_limit=" + std::to_string(c.prime_limit);
  rows.push_back(pr);

  ResultRow check = base_row(c, "inv_zeta_times_zeta", inv * zeta_s);
  check.trunc_meta = pr.trunc_meta + ";" + tol_meta;
  rows.push_back(check);

  const ZetaLaw law(c.s, kSeriesTol);
  const MultiplicativeSpec all_specs[] = {specs::one(), specs::moebius(), specs::chi4(),
                                          sum_two_squares_spec()};
  for (const MultiplicativeSpec& spec : all_specs) {
    ResultRow prod = base_row(c, "series_" + spec.name,
                              euler_product_multiplicative(spec, c.s, table, c.inner_terms));
    prod.trunc_meta = prod_meta;
    rows.push_back(prod);

    ResultRow mean = base_row(c, "expectation_" + spec.name,
                              expected_multiplicative(spec, law, table, c.inner_terms));
    mean.trunc_meta = prod_meta;
    rows.push_back(mean);
  }
}

void run_converge(const ExperimentConfig& c, std::vector<ResultRow>& rows) {
  const PrimeTable table = sieve(c.n);
  const ZetaLaw law(static_cast<double>(c.m), kSeriesTol);
  const SparsePmf<std::uint64_t> zeta_trunc = truncated_pmf(law, c.support_limit);
  const std::string tv_meta = "support_limit=" + std::to_string(c.support_limit);

  std::vector<std::uint64_t> grid;
  for (std::uint64_t g = 10; g <= c.n; g *= 10) grid.push_back(g);
  if (grid.empty() || grid.back() != c.n) grid.push_back(c.n);

  for (std::uint64_t g : grid) {
    const SparsePmf<std::uint64_t> gcd_law = gcd_law_exact(g, c.m, table);
    const SparsePmf<std::uint64_t> radical_law = radical_law_exact(g, c.m, table);
    const TvBounds tv = tv_distance(gcd_law, zeta_trunc);

    ResultRow lower = base_row(c, "tv_gcd_vs_zeta_lower", tv.lower);
    lower.param_n = g;
    lower.param_s = static_cast<double>(c.m);
    lower.trunc_meta = tv_meta;
    rows.push_back(lower);

    ResultRow upper = base_row(c, "tv_gcd_vs_zeta_upper", tv.upper);
    upper.param_n = g;
    upper.param_s = static_cast<double>(c.m);
    upper.trunc_meta = tv_meta;
    rows.push_back(upper);

    ResultRow gap =
        base_row(c, "cesaro_gap", tv_distance(gcd_law, radical_law).scalar());
    gap.param_n = g;
    gap.param_s = static_cast<double>(c.m);
    gap.trunc_meta = "exact";
    rows.push_back(gap);
  }
}

void run_gauss(const ExperimentConfig& c, std::vector<ResultRow>& rows) {
  const std::vector<GaussClass> ball = ball_classes(static_cast<double>(c.n));
  const auto& profile = gauss_profile_classes();

  std::vector<GaussCoprimeCounts> partial(c.workers);
  parallel_workers(c.samples, c.workers, c.seed,
                   [&](std::uint32_t w, std::uint64_t share, Rng& rng) {
                     partial[w] = gauss_coprime_counts(ball, share, rng);
                   });
  GaussCoprimeCounts counts;
  counts.divisible.assign(profile.size(), 0);
  for (const GaussCoprimeCounts& p : partial) {
    if (p.samples == 0) continue;
    counts.unit += p.unit;
    counts.samples += p.samples;
    for (std::size_t k = 0; k < profile.size(); ++k) counts.divisible[k] += p.divisible[k];
  }

  const std::string meta = mc_meta(c) + ";ball=" + std::to_string(ball.size());
  const MonteCarloEstimate unit = binomial_estimate(counts.unit, counts.samples);
  ResultRow freq = base_row(c, "unit_gcd_freq", unit.value);
  freq.param_s = 2.0;
  freq.std_error = unit.std_error;
  freq.trunc_meta = meta;
  rows.push_back(freq);

  for (std::size_t k = 0; k < profile.size(); ++k) {
    const MonteCarloEstimate est = binomial_estimate(counts.divisible[k], counts.samples);
    ResultRow row = base_row(c, "divides_" + key_to_csv(profile[k]), est.value);
    row.param_s = 2.0;
    row.std_error = est.std_error;
    row.trunc_meta = meta;
    rows.push_back(row);
  }

  ResultRow target = base_row(
      c, "target_density",
      1.0 / (zeta_value(2.0, kSeriesTol) * dirichlet_beta(2.0, kSeriesTol)));
  target.param_s = 2.0;
  target.trunc_meta = "tolerance=" + fmt(kSeriesTol);
  rows.push_back(target);
}

struct SampleAccum {
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t div2 = 0, div3 = 0, div5 = 0;
  long double inv_sum = 0.0L;
  long double inv_sq_sum = 0.0L;
};

void run_sample(const ExperimentConfig& c, std::vector<ResultRow>& rows) {
  const ZetaLaw law(c.s, kSeriesTol);

  std::vector<SampleAccum> partial(c.workers);
  parallel_workers(c.samples, c.workers, c.seed,
                   [&](std::uint32_t w, std::uint64_t share, Rng& rng) {
                     SampleAccum& acc = partial[w];
                     for (std::uint64_t i = 0; i < share; ++i) {
                       const std::uint64_t x = sample(law, rng);
                       ++acc.counts[x];
                       if (x % 2 == 0) ++acc.div2;
                       if (x % 3 == 0) ++acc.div3;
                       if (x % 5 == 0) ++acc.div5;
                       const long double inv = 1.0L / static_cast<long double>(x);
                       acc.inv_sum += inv;
                       acc.inv_sq_sum += inv * inv;
                     }
                   });
  SampleAccum acc;
  for (const SampleAccum& p : partial) {
    for (const auto& [k, v] : p.counts) acc.counts[k] += v;
    acc.div2 += p.div2;
    acc.div3 += p.div3;
    acc.div5 += p.div5;
    acc.inv_sum += p.inv_sum;
    acc.inv_sq_sum += p.inv_sq_sum;
  }

  const std::string meta = mc_meta(c);
  auto push_binomial = [&](const std::string& method, std::uint64_t successes) {
    const MonteCarloEstimate est = binomial_estimate(successes, c.samples);
    ResultRow row = base_row(c, method, est.value);
    row.std_error = est.std_error;
    row.trunc_meta = meta;
    rows.push_back(row);
  };
  for (std::uint64_t k = 1; k <= 10; ++k) {
    const auto it = acc.counts.find(k);
    push_binomial("freq_" + std::to_string(k), it == acc.counts.end() ? 0 : it->second);
  }
  push_binomial("div_freq_2", acc.div2);
  push_binomial("div_freq_3", acc.div3);
  push_binomial("div_freq_5", acc.div5);

  const double n = static_cast<double>(c.samples);
  const double mean = static_cast<double>(acc.inv_sum / static_cast<long double>(c.samples));
  const double var =
      std::max(0.0, static_cast<double>(acc.inv_sq_sum / static_cast<long double>(c.samples)) -
                        mean * mean);
  ResultRow inv_row = base_row(c, "mean_inverse", mean);
  inv_row.std_error = std::sqrt(var / n);
  inv_row.trunc_meta = meta;
  rows.push_back(inv_row);

  SparsePmf<std::uint64_t> empirical;
  for (const auto& [k, v] : acc.counts)
    empirical.mass[k] = static_cast<double>(v) / n;
  const TvBounds tv = tv_distance(restrict_support(empirical, c.support_limit),
                                  truncated_pmf(law, c.support_limit));
  const std::string tv_meta = meta + ";support_limit=" + std::to_string(c.support_limit);
  ResultRow tv_lower = base_row(c, "tv_vs_exact_lower", tv.lower);
  tv_lower.trunc_meta = tv_meta;
  rows.push_back(tv_lower);
  ResultRow tv_upper = base_row(c, "tv_vs_exact_upper", tv.upper);
  tv_upper.trunc_meta = tv_meta;
  rows.push_back(tv_upper);
}

}  // namespace

const char* subcommand_name(Subcommand c) {
  switch (c) {
    case Subcommand::densities: return "densities";
    case Subcommand::euler: return "euler";
    case Subcommand::converge: return "converge";
    case Subcommand::gauss: return "gauss";
    case Subcommand::sample: return "sample";
  }
  throw std::logic_error("subcommand_name: unknown subcommand");
}

void validate_config(const ExperimentConfig& c) {
  if (c.workers < 1 || c.workers > 256)
    throw std::invalid_argument("--workers must be in [1, 256]");
  switch (c.subcommand) {
    case Subcommand::densities:
      if (c.n < 1 || c.n > kMaxSieve)
        throw std::invalid_argument("--n must be in [1, 2^31]");
      if (c.m < 2 || c.m > 6) throw std::invalid_argument("--m must be in [2, 6]");
      if (c.samples > 1000000000)
        throw std::invalid_argument("--samples must be at most 10^9");
      try {
        checked_pow(c.n, c.m);
      } catch (const std::overflow_error&) {
        throw std::invalid_argument("--n^--m exceeds the exact 64-bit range");
      }
      break;
    case Subcommand::euler:
      if (c.prime_limit < 2 || c.prime_limit > kMaxSieve)
        throw std::invalid_argument("--prime-limit must be in [2, 2^31]");
      if (!(c.s >= kMinProductS && c.s <= 64.0))
        throw std::invalid_argument("--s must be in [1.01, 64]");
      if (c.inner_terms < 1 || c.inner_terms > 512)
        throw std::invalid_argument("--inner-terms must be in [1, 512]");
      break;
    case Subcommand::converge:
      if (c.n < 10 || c.n > 1000000)
        throw std::invalid_argument("--n must be in [10, 10^6]");
      if (c.m < 2 || c.m > 4) throw std::invalid_argument("--m must be in [2, 4]");
      if (c.support_limit < 1000 || c.support_limit > 10000000)
        throw std::invalid_argument("--support-limit must be in [10^3, 10^7]");
      break;
    case Subcommand::gauss:
      if (c.n < 2 || c.n > 4096) throw std::invalid_argument("--n must be in [2, 4096]");
      if (c.samples < 1 || c.samples > 1000000000)
        throw std::invalid_argument("--samples must be in [1, 10^9]");
      break;
    case Subcommand::sample:
      if (!(c.s >= kMinProductS && c.s <= 64.0))
        throw std::invalid_argument("--s must be in [1.01, 64]");
      if (c.samples < 1 || c.samples > 1000000000)
        throw std::invalid_argument("--samples must be in [1, 10^9]");
      if (c.support_limit < 1000 || c.support_limit > 10000000)
        throw std::invalid_argument("--support-limit must be in [10^3, 10^7]");
      break;
  }
}

Report run_experiment(const ExperimentConfig& config) {
  validate_config(config);
  Report report;
  report.config = config;
  report.timestamp = iso_timestamp();
  switch (config.subcommand) {
    case Subcommand::densities: run_densities(config, report.rows); break;
    case Subcommand::euler: run_euler(config, report.rows); break;
    case Subcommand::converge: run_converge(config, report.rows); break;
    case Subcommand::gauss: run_gauss(config, report.rows); break;
    case Subcommand::sample: run_sample(config, report.rows); break;
  }
  return report;
}

namespace {

std::string config_line(const ExperimentConfig& c) {
  std::string out;
  out += "subcommand=";
  out += subcommand_name(c.subcommand);
  out += " n=" + std::to_string(c.n);
  out += " m=" + std::to_string(c.m);
  out += " s=" + fmt(c.s);
  out += " samples=" + std::to_string(c.samples);
  out += " prime_limit=" + std::to_string(c.prime_limit);
  out += " inner_terms=" + std::to_string(c.inner_terms);
  out += " support_limit=" + std::to_string(c.support_limit);
  out += " seed=" + std::to_string(c.seed);
  out += " workers=" + std::to_string(c.workers);
  out += std::string(" format=") + (c.format == OutputFormat::csv ? "csv" : "json");
  return out;
}

}  // namespace

std::string render_csv(const Report& report) {
  std::string out;
  out += std::string("# zetalaw ") + kVersion + "\n";
  out += "# timestamp " + report.timestamp + "\n";
  out += "# config " + config_line(report.config) + "\n";
  out += "experiment,param_n,param_m,param_s,method,value,stderr,trunc_meta,seed\n";
  for (const ResultRow& row : report.rows) {
    out += row.experiment;
    out += ',' + std::to_string(row.param_n);
    out += ',' + std::to_string(row.param_m);
    out += ',' + fmt(row.param_s);
    out += ',' + row.method;
    out += ',' + fmt(row.value);
    out += ',';
    if (!std::isnan(row.std_error)) out += fmt(row.std_error);
    out += ',' + row.trunc_meta;
    out += ',' + std::to_string(row.seed);
    out += '\n';
  }
  return out;
}

std::string render_json(const Report& report) {
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  j["timestamp"] = report.timestamp;
  j["config"] = {
      {"subcommand", subcommand_name(report.config.subcommand)},
      {"n", report.config.n},
      {"m", report.config.m},
      {"s", report.config.s},
      {"samples", report.config.samples},
      {"prime_limit", report.config.prime_limit},
      {"inner_terms", report.config.inner_terms},
      {"support_limit", report.config.support_limit},
      {"seed", report.config.seed},
      {"workers", report.config.workers},
      {"format", report.config.format == OutputFormat::csv ? "csv" : "json"},
  };
  j["rows"] = nlohmann::ordered_json::array();
  for (const ResultRow& row : report.rows) {
    nlohmann::ordered_json r;
    r["experiment"] = row.experiment;
    r["param_n"] = row.param_n;
    r["param_m"] = row.param_m;
    r["param_s"] = row.param_s;
    r["method"] = row.method;
    r["value"] = row.value;
    if (std::isnan(row.std_error)) r["stderr"] = nullptr;
    else r["stderr"] = row.std_error;
    r["trunc_meta"] = row.trunc_meta;
    r["seed"] = row.seed;
    j["rows"].push_back(r);
  }
  return j.dump(2) + "\n";
}

std::string render(const Report& report) {
  return report.config.format == OutputFormat::csv ? render_csv(report) : render_json(report);
}

}  // namespace zetalaw
