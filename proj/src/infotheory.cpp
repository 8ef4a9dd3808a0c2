#include "omc/infotheory.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace omc {

namespace {

// a * log2(a / b) with the 0 log 0 = 0 convention.
double plogq(double a, double b) {
  if (a <= 0.0) return 0.0;
  return a * std::log2(a / b);
}

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("input probability alpha must lie in [0, 1]");
  }
}

CapacityResult maximize(const DetectionMatrix& m,
                        const std::function<double(const DetectionMatrix&, double)>& objective) {
  constexpr int kGrid = 1000;
  int best = 0;
  double best_value = objective(m, 0.0);
  for (int i = 1; i <= kGrid; ++i) {
    const double value = objective(m, static_cast<double>(i) / kGrid);
    if (value > best_value) {
      best_value = value;
      best = i;
    }
  }

  double lo = static_cast<double>(std::max(best - 1, 0)) / kGrid;
  double hi = static_cast<double>(std::min(best + 1, kGrid)) / kGrid;
  const double inv_phi = std::numbers::phi - 1.0;
  double a = hi - inv_phi * (hi - lo);
  double b = lo + inv_phi * (hi - lo);
  double fa = objective(m, a);
  double fb = objective(m, b);
  while (hi - lo > 1e-10) {
    if (fa < fb) {
      lo = a;
      a = b;
      fa = fb;
      b = lo + inv_phi * (hi - lo);
      fb = objective(m, b);
    } else {
      hi = b;
      b = a;
      fb = fa;
      a = hi - inv_phi * (hi - lo);
      fa = objective(m, a);
    }
  }

  CapacityResult r;
  r.matrix = m;
  r.alpha_star = static_cast<double>(best) / kGrid;
  r.capacity = best_value;
  const double mid = 0.5 * (lo + hi);
  const double fmid = objective(m, mid);
  if (fmid >= r.capacity) {
    r.alpha_star = mid;
    r.capacity = fmid;
  }
  return r;
}

}  // namespace

double gaussian_cdf(double x, double mu, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("gaussian_cdf: sigma must be positive");
  return 0.5 * std::erfc(-(x - mu) / (sigma * std::numbers::sqrt2));
}

double detection_probability(const SymbolStats& stats, const IntensityBand& band) {
  if (stats.std_sigma == 0.0) return band.contains(stats.mean_mu) ? 1.0 : 0.0;
  const double upper = gaussian_cdf(band.conc_hi, stats.mean_mu, stats.std_sigma);
  const double lower = gaussian_cdf(band.conc_lo, stats.mean_mu, stats.std_sigma);
  return std::max(0.0, upper - lower);
}

double mutual_information(const DetectionMatrix& m, double alpha) {
  check_alpha(alpha);
  const double beta = 1.0 - alpha;
  const double y0 = alpha * m.p00 + beta * m.p01;
  const double y1 = alpha * m.p10 + beta * m.p11;
  // plogq(c * p, c * y) == c * p * log2(p / y); the coefficient is folded in
  // so a zero input probability removes the term entirely.
  return plogq(alpha * m.p00, alpha * y0) + plogq(alpha * m.p10, alpha * y1) +
         plogq(beta * m.p01, beta * y0) + plogq(beta * m.p11, beta * y1);
}

CapacityResult channel_capacity(const DetectionMatrix& m) { return maximize(m, mutual_information); }

double erasure_mutual_information(const DetectionMatrix& m, double alpha) {
  check_alpha(alpha);
  const double beta = 1.0 - alpha;
  const double e0 = std::max(0.0, 1.0 - m.p00 - m.p10);
  const double e1 = std::max(0.0, 1.0 - m.p01 - m.p11);
  const double ye = alpha * e0 + beta * e1;
  return mutual_information(m, alpha) + plogq(alpha * e0, alpha * ye) +
         plogq(beta * e1, beta * ye);
}

CapacityResult erasure_channel_capacity(const DetectionMatrix& m) {
  return maximize(m, erasure_mutual_information);
}

DetectionMatrix detection_matrix(const std::vector<SymbolStats>& stats, const OiskScheme& scheme) {
  if (scheme.size() != 2 || stats.size() != 2) {
    throw std::invalid_argument("detection_matrix: binary scheme and two symbol stats required");
  }
  const auto& band0 = scheme[0].band;
  const auto& band1 = scheme[1].band;
  return {detection_probability(stats[0], band0), detection_probability(stats[1], band0),
          detection_probability(stats[0], band1), detection_probability(stats[1], band1)};
}

DetectionMatrix detection_matrix(const EmpiricalMatrix& e) {
  if (e.symbol_count != 2) {
    throw std::invalid_argument("detection_matrix: empirical matrix must be binary");
  }
  return {e.frequency(0, 0), e.frequency(1, 0), e.frequency(0, 1), e.frequency(1, 1)};
}

PipelineResult capacity_pipeline(const ExperimentConfig& cfg, ExecutionOptions exec) {
  const ExperimentConfig valid = validate_config(cfg);
  const OiskScheme scheme = build_scheme(valid);
  if (scheme.size() != 2) {
    throw std::invalid_argument("capacity_pipeline: only two-symbol schemes are supported");
  }
  PipelineResult out;
  for (std::size_t s = 0; s < scheme.size(); ++s) {
    out.stats.push_back(run_symbol_trials(scheme, s, valid, exec).stats);
  }
  out.capacity = channel_capacity(detection_matrix(out.stats, scheme));
  return out;
}

}  // namespace omc
