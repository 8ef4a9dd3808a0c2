#pragma once

// Seeded Monte-Carlo simulation of received concentrations.
//
// Each trial draws D uniformly from the temperature-scaled range, propagates
// the symbol's transmit concentration to the receiver, then adds one
// N(mu_n, sigma_n^2) sample. The noisy value is not clamped, so negative
// readings simply decode as erasures.
//
// Trial i of symbol s always uses the substream (master_seed, s, i). Trials
// are aggregated in fixed-size chunks that are merged in chunk order, which
// makes the OpenMP path bit-identical for any thread count.
// run_symbol_trials_serial is the single-pass reference used in tests and
// benchmarks.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "omc/channel.hpp"
#include "omc/domain.hpp"
#include "omc/psychophysics.hpp"

namespace omc {

inline constexpr std::uint64_t kTrialsPerChunk = 4096;

struct SymbolStats {
  std::size_t symbol = 0;
  double mean_mu = 0.0;
  double std_sigma = 0.0;  // sample standard deviation (n - 1)
  std::uint64_t trial_count = 0;
  double std_error_of_mean = 0.0;
};

struct TrialRecord {
  double sampled_D = 0.0;
  double propagated_concentration = 0.0;
  double awgn_draw = 0.0;
  double received_concentration = 0.0;  // propagated + awgn
  std::optional<std::size_t> decoded;   // nullopt = erasure
};

/// Welford accumulator with Chan's pairwise merge.
struct RunningStats {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) noexcept {
    ++n;
    const double delta = x - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (x - mean);
  }

  void merge(const RunningStats& other) noexcept;

  double variance() const noexcept { return n > 1 ? m2 / static_cast<double>(n - 1) : 0.0; }
};

/// Everything a single trial needs, resolved once per (scheme, symbol, cfg).
class TrialKernel {
 public:
  TrialKernel(const OiskScheme& scheme, std::size_t symbol, const ExperimentConfig& cfg);

  TrialRecord operator()(std::uint64_t trial) const noexcept;

  std::size_t symbol() const noexcept { return symbol_; }

 private:
  const OiskScheme* scheme_;
  std::size_t symbol_;
  std::uint64_t seed_;
  ChannelParams params_;
  DiffusionRange diffusion_;
  double noise_mean_;
  double noise_std_;
};

struct ExecutionOptions {
  int threads = 0;  // 0 = OpenMP default
};

struct SymbolRun {
  SymbolStats stats;
  // Decoded-outcome histogram, one slot per symbol plus a final erasure slot.
  std::vector<std::uint64_t> outcome_counts;
};

TrialRecord simulate_trial(const OiskScheme& scheme, std::size_t symbol,
                           const ExperimentConfig& cfg, std::uint64_t trial);

/// Parallel, chunk-deterministic run of cfg.trial_count trials.
/// Throws std::out_of_range for a symbol outside the scheme.
SymbolRun run_symbol_trials(const OiskScheme& scheme, std::size_t symbol,
                            const ExperimentConfig& cfg, ExecutionOptions exec = {});

/// Serial single-pass reference. Matches run_symbol_trials to within
/// floating-point reassociation of the mean/variance reduction.
SymbolRun run_symbol_trials_serial(const OiskScheme& scheme, std::size_t symbol,
                                   const ExperimentConfig& cfg);

/// All trial records for one symbol, in trial order.
std::vector<TrialRecord> collect_trial_records(const OiskScheme& scheme, std::size_t symbol,
                                               const ExperimentConfig& cfg,
                                               ExecutionOptions exec = {});

/// CSV with header trial,D,phi_propagated,awgn,phi_received,decoded.
/// Erasures are written as "erasure".
void write_trial_csv(std::ostream& out, const std::vector<TrialRecord>& records);

/// Observed frequencies of decoded outcomes per transmitted symbol.
struct EmpiricalMatrix {
  std::size_t symbol_count = 0;
  std::uint64_t trials_per_symbol = 0;
  // counts[input][output]; output == symbol_count is the erasure column.
  std::vector<std::vector<std::uint64_t>> counts;

  /// Frequency of decoding `output` when `input` was sent, P(Y = output | X = input).
  double frequency(std::size_t input, std::size_t output) const;
  double erasure_frequency(std::size_t input) const { return frequency(input, symbol_count); }
};

EmpiricalMatrix empirical_detection_matrix(const OiskScheme& scheme, const ExperimentConfig& cfg,
                                           ExecutionOptions exec = {});

}  // namespace omc
