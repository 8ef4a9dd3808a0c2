#include "omc/domain.hpp"

#include <cmath>
#include <sstream>

namespace omc {

namespace {

std::string join_violations(const std::vector<Violation>& violations) {
  std::ostringstream os;
  os << "invalid configuration (" << violations.size() << " violation"
     << (violations.size() == 1 ? "" : "s") << ")";
  for (const auto& v : violations) {
    os << "\n  " << v.field << ": " << v.reason;
  }
  return os.str();
}

class Checker {
 public:
  void positive(const std::string& field, double value) {
    if (!(std::isfinite(value) && value > 0.0)) {
      add(field, field_leaf(field) + " must be positive");
    }
  }

  void non_negative(const std::string& field, double value) {
    if (!(std::isfinite(value) && value >= 0.0)) {
      add(field, field_leaf(field) + " must be non-negative");
    }
  }

  void finite(const std::string& field, double value) {
    if (!std::isfinite(value)) add(field, field_leaf(field) + " must be finite");
  }

  void add(std::string field, std::string reason) {
    out.push_back({std::move(field), std::move(reason)});
  }

  std::vector<Violation> out;

 private:
  static std::string field_leaf(const std::string& field) {
    auto dot = field.rfind('.');
    return dot == std::string::npos ? field : field.substr(dot + 1);
  }
};

}  // namespace

ExperimentConfig paper_defaults() { return ExperimentConfig{}; }

ConfigError::ConfigError(std::vector<Violation> violations)
    : std::runtime_error(join_violations(violations)),
      violations_(std::move(violations)) {}

ConfigError::ConfigError(std::string field, std::string reason)
    : ConfigError(std::vector<Violation>{{std::move(field), std::move(reason)}}) {}

std::vector<Violation> check_config(const ExperimentConfig& cfg) {
  Checker c;

  const auto& od = cfg.odorant;
  c.positive("odorant.weber_fechner_k", od.weber_fechner_k);
  c.finite("odorant.intensity_intercept_d", od.intensity_intercept_d);
  c.positive("odorant.diffusion_min", od.diffusion_min);
  c.positive("odorant.diffusion_max", od.diffusion_max);
  if (od.diffusion_min > od.diffusion_max) {
    c.add("odorant.diffusion_max", "diffusion_max must not be below diffusion_min");
  }
  c.positive("odorant.reference_temperature", od.reference_temperature);

  c.positive("link.tx_rx_separation_R", cfg.link.tx_rx_separation_R);
  c.positive("link.airflow_speed_v", cfg.link.airflow_speed_v);
  c.positive("link.symbol_period_tau", cfg.link.symbol_period_tau);
  c.positive("link.temperature_T", cfg.link.temperature_T);

  c.finite("noise.awgn_mean_mu_n", cfg.noise.awgn_mean_mu_n);
  c.non_negative("noise.awgn_std_sigma_n", cfg.noise.awgn_std_sigma_n);

  const auto& levels = cfg.scheme_levels;
  if (levels.empty()) {
    c.add("scheme_levels", "scheme_levels must contain at least one level");
  }
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const double level = levels[i];
    const std::string field = "scheme_levels[" + std::to_string(i) + "]";
    if (!std::isfinite(level) || level < kIntensityScaleMin || level > kIntensityScaleMax) {
      c.add(field, "level must lie on the intensity scale [0, 6]");
    }
    if (i > 0 && !(level > levels[i - 1])) {
      c.add(field, "scheme_levels must be strictly increasing");
    }
  }

  const double hw = cfg.intensity_halfwidth;
  c.positive("intensity_halfwidth", hw);
  if (std::isfinite(hw) && hw > 0.0) {
    for (std::size_t i = 1; i < levels.size(); ++i) {
      if (levels[i] > levels[i - 1] && !(levels[i] - levels[i - 1] > 2.0 * hw)) {
        c.add("scheme_levels[" + std::to_string(i) + "]",
              "bands overlap: level spacing must exceed 2*intensity_halfwidth");
      }
    }
  }

  if (cfg.trial_count == 0) c.add("trial_count", "trial_count must be positive");

  return std::move(c.out);
}

ExperimentConfig validate_config(const ExperimentConfig& cfg) {
  auto violations = check_config(cfg);
  if (!violations.empty()) throw ConfigError(std::move(violations));
  return cfg;
}

}  // namespace omc
