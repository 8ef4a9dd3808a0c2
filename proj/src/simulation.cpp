#include "omc/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <omp.h>

#include "omc/random.hpp"

namespace omc {

namespace {

struct ChunkAccumulator {
  RunningStats stats;
  std::vector<std::uint64_t> counts;
};

void check_symbol(const OiskScheme& scheme, std::size_t symbol) {
  if (symbol >= scheme.size()) {
    throw std::out_of_range("symbol " + std::to_string(symbol) + " not in scheme of size " +
                            std::to_string(scheme.size()));
  }
}

int resolve_threads(ExecutionOptions exec) {
  return exec.threads > 0 ? exec.threads : omp_get_max_threads();
}

SymbolStats finish(std::size_t symbol, const RunningStats& acc) {
  SymbolStats s;
  s.symbol = symbol;
  s.mean_mu = acc.mean;
  s.std_sigma = std::sqrt(acc.variance());
  s.trial_count = acc.n;
  s.std_error_of_mean = acc.n > 0 ? s.std_sigma / std::sqrt(static_cast<double>(acc.n)) : 0.0;
  return s;
}

}  // namespace

void RunningStats::merge(const RunningStats& other) noexcept {
  if (other.n == 0) return;
  if (n == 0) {
    *this = other;
    return;
  }
  const auto na = static_cast<double>(n);
  const auto nb = static_cast<double>(other.n);
  const double total = na + nb;
  const double delta = other.mean - mean;
  mean += delta * nb / total;
  m2 += other.m2 + delta * delta * na * nb / total;
  n += other.n;
}

TrialKernel::TrialKernel(const OiskScheme& scheme, std::size_t symbol,
                         const ExperimentConfig& cfg)
    : scheme_(&scheme),
      symbol_(symbol),
      seed_(cfg.master_seed),
      diffusion_(diffusion_range_at(cfg.odorant, cfg.link.temperature_T)),
      noise_mean_(cfg.noise.awgn_mean_mu_n),
      noise_std_(cfg.noise.awgn_std_sigma_n) {
  check_symbol(scheme, symbol);
  params_.initial_concentration_A = scheme[symbol].transmit_concentration_A;
  params_.R = cfg.link.tx_rx_separation_R;
  params_.v = cfg.link.airflow_speed_v;
  params_.tau = cfg.link.symbol_period_tau;
  params_.D = diffusion_.lo;
  params_.check();
}

TrialRecord TrialKernel::operator()(std::uint64_t trial) const noexcept {
  CounterRng rng(seed_, symbol_, trial);
  ChannelParams p = params_;
  p.D = diffusion_.draw(rng.uniform());

  TrialRecord rec;
  rec.sampled_D = p.D;
  rec.propagated_concentration = received_concentration(p);
  rec.awgn_draw = noise_std_ > 0.0 ? noise_mean_ + noise_std_ * rng.normal() : noise_mean_;
  rec.received_concentration = rec.propagated_concentration + rec.awgn_draw;
  rec.decoded = decode(rec.received_concentration, *scheme_);
  return rec;
}

TrialRecord simulate_trial(const OiskScheme& scheme, std::size_t symbol,
                           const ExperimentConfig& cfg, std::uint64_t trial) {
  return TrialKernel(scheme, symbol, cfg)(trial);
}

SymbolRun run_symbol_trials(const OiskScheme& scheme, std::size_t symbol,
                            const ExperimentConfig& cfg, ExecutionOptions exec) {
  const TrialKernel kernel(scheme, symbol, cfg);
  const std::uint64_t trials = cfg.trial_count;
  const std::size_t outcomes = scheme.size() + 1;
  const std::uint64_t chunk_count = (trials + kTrialsPerChunk - 1) / kTrialsPerChunk;

  std::vector<ChunkAccumulator> chunks(chunk_count);
  const auto signed_chunks = static_cast<std::int64_t>(chunk_count);

#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_threads(exec))
  for (std::int64_t c = 0; c < signed_chunks; ++c) {
    auto& chunk = chunks[static_cast<std::size_t>(c)];
    chunk.counts.assign(outcomes, 0);
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * kTrialsPerChunk;
    const std::uint64_t end = std::min(trials, begin + kTrialsPerChunk);
    for (std::uint64_t i = begin; i < end; ++i) {
      const TrialRecord rec = kernel(i);
      chunk.stats.add(rec.received_concentration);
      ++chunk.counts[rec.decoded.value_or(scheme.size())];
    }
  }

  RunningStats total;
  std::vector<std::uint64_t> counts(outcomes, 0);
  for (const auto& chunk : chunks) {
    total.merge(chunk.stats);
    for (std::size_t j = 0; j < outcomes; ++j) counts[j] += chunk.counts[j];
  }
  return {finish(symbol, total), std::move(counts)};
}

SymbolRun run_symbol_trials_serial(const OiskScheme& scheme, std::size_t symbol,
                                   const ExperimentConfig& cfg) {
  const TrialKernel kernel(scheme, symbol, cfg);
  RunningStats acc;
  std::vector<std::uint64_t> counts(scheme.size() + 1, 0);
  for (std::uint64_t i = 0; i < cfg.trial_count; ++i) {
    const TrialRecord rec = kernel(i);
    acc.add(rec.received_concentration);
    ++counts[rec.decoded.value_or(scheme.size())];
  }
  return {finish(symbol, acc), std::move(counts)};
}

std::vector<TrialRecord> collect_trial_records(const OiskScheme& scheme, std::size_t symbol,
                                               const ExperimentConfig& cfg,
                                               ExecutionOptions exec) {
  const TrialKernel kernel(scheme, symbol, cfg);
  std::vector<TrialRecord> records(cfg.trial_count);
  const auto n = static_cast<std::int64_t>(cfg.trial_count);
#pragma omp parallel for schedule(static) num_threads(resolve_threads(exec))
  for (std::int64_t i = 0; i < n; ++i) {
    records[static_cast<std::size_t>(i)] = kernel(static_cast<std::uint64_t>(i));
  }
  return records;
}

void write_trial_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
  out << "trial,D,phi_propagated,awgn,phi_received,decoded\n";
  char line[256];
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    std::snprintf(line, sizeof line, "%zu,%.17g,%.17g,%.17g,%.17g,", i, r.sampled_D,
                  r.propagated_concentration, r.awgn_draw, r.received_concentration);
    out << line;
    if (r.decoded) {
      out << *r.decoded << '\n';
    } else {
      out << "erasure\n";
    }
  }
}

double EmpiricalMatrix::frequency(std::size_t input, std::size_t output) const {
  if (trials_per_symbol == 0) return 0.0;
  return static_cast<double>(counts.at(input).at(output)) /
         static_cast<double>(trials_per_symbol);
}

EmpiricalMatrix empirical_detection_matrix(const OiskScheme& scheme, const ExperimentConfig& cfg,
                                           ExecutionOptions exec) {
  EmpiricalMatrix m;
  m.symbol_count = scheme.size();
  m.trials_per_symbol = cfg.trial_count;
  for (std::size_t s = 0; s < scheme.size(); ++s) {
    m.counts.push_back(run_symbol_trials(scheme, s, cfg, exec).outcome_counts);
  }
  return m;
}

}  // namespace omc
