#pragma once

// Gaussian detection model and single-slot capacity of the binary OISK link.
//
// Received concentrations per symbol are modelled as N(mu_i, sigma_i^2).
// Detection probabilities are the Gaussian mass inside each concentration
// band. Mutual information uses only the two in-band outputs; the erasure
// mass is the deficit of each column and contributes nothing, so the output
// law is sub-normalised. erasure_mutual_information is the textbook
// three-output alternative and is kept for comparison only.

#include <vector>

#include "omc/domain.hpp"
#include "omc/psychophysics.hpp"
#include "omc/simulation.hpp"

namespace omc {

/// P(X <= x) for X ~ N(mu, sigma^2), evaluated as erfc(-(x - mu) / (sigma sqrt 2)) / 2.
/// Uses the C library erfc (glibc: a few ulp relative error), so the absolute
/// error stays far below 1e-10 over the whole real line.
/// Throws std::invalid_argument if sigma <= 0.
double gaussian_cdf(double x, double mu, double sigma);

/// Gaussian mass of N(stats.mean_mu, stats.std_sigma^2) inside the band.
/// With std_sigma == 0 this is the indicator of mean_mu lying in the band.
double detection_probability(const SymbolStats& stats, const IntensityBand& band);

/// Binary detection matrix. pJI = P(Y = J | X = I): the first digit is the
/// decoded symbol, the second the transmitted one.
struct DetectionMatrix {
  double p00 = 0.0;
  double p01 = 0.0;
  double p10 = 0.0;
  double p11 = 0.0;

  /// Same channel with symbol labels exchanged.
  DetectionMatrix swapped() const noexcept { return {p11, p10, p01, p00}; }
};

struct CapacityResult {
  double capacity = 0.0;    // bit/slot
  double alpha_star = 0.0;  // maximizing P(X = 0)
  DetectionMatrix matrix;
};

/// Mutual information in bits for P(X = 0) = alpha. Terms whose coefficient
/// alpha * pJI vanishes contribute zero. Throws std::invalid_argument unless
/// alpha is in [0, 1].
double mutual_information(const DetectionMatrix& m, double alpha);

/// max over alpha of mutual_information: 1e-3 grid scan, then golden-section
/// refinement of the bracketing cell to below 1e-9 in alpha.
CapacityResult channel_capacity(const DetectionMatrix& m);

/// Mutual information of the three-output channel {0, 1, erasure}, where
/// each column's erasure probability is 1 - p0I - p1I.
double erasure_mutual_information(const DetectionMatrix& m, double alpha);
CapacityResult erasure_channel_capacity(const DetectionMatrix& m);

/// Analytic matrix from fitted per-symbol statistics of a two-symbol scheme.
DetectionMatrix detection_matrix(const std::vector<SymbolStats>& stats, const OiskScheme& scheme);

/// Observed frequencies of a two-symbol run in DetectionMatrix layout.
DetectionMatrix detection_matrix(const EmpiricalMatrix& empirical);

struct PipelineResult {
  std::vector<SymbolStats> stats;
  CapacityResult capacity;
};

/// Simulate every symbol, fit Gaussians, build the analytic matrix and
/// maximize mutual information. Requires a valid two-symbol configuration;
/// throws ConfigError or std::invalid_argument otherwise.
PipelineResult capacity_pipeline(const ExperimentConfig& cfg, ExecutionOptions exec = {});

}  // namespace omc
