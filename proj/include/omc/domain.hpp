#pragma once

// Core value types shared by every stage of the odor link model.
//
// Units are fixed: metres, m/s, seconds, kelvin, m^2/s, and odor units per
// cubic metre (ou/m^3) for concentrations. Nothing in the core converts units.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace omc {

struct OdorantSpec {
  std::string name = "benzene";
  double weber_fechner_k = 2.59;
  double intensity_intercept_d = 0.5;
  // Diffusion range at reference_temperature and 1 atm (760 Torr). The
  // 69..75 Torr cm^2/s measurement is stored already converted.
  double diffusion_min = 9.078e-6;
  double diffusion_max = 9.868e-6;
  double reference_temperature = 298.0;
  std::string comment = "D range at 1 atm (760 Torr); pressure is not modelled";
};

struct LinkConfig {
  double tx_rx_separation_R = 50.0;
  double airflow_speed_v = 4.0;
  double symbol_period_tau = 20e-6;
  double temperature_T = 298.0;
};

struct NoiseSpec {
  double awgn_mean_mu_n = 0.0;
  double awgn_std_sigma_n = 1.0;
};

inline constexpr double kIntensityScaleMin = 0.0;
inline constexpr double kIntensityScaleMax = 6.0;
inline constexpr std::uint64_t kDefaultTrialCount = 100'000;
inline constexpr std::uint64_t kDefaultMasterSeed = 0x0D0125EEDULL;

struct ExperimentConfig {
  OdorantSpec odorant;
  LinkConfig link;
  NoiseSpec noise;
  std::vector<double> scheme_levels{4.0, 5.0};
  double intensity_halfwidth = 0.25;
  std::uint64_t trial_count = kDefaultTrialCount;
  std::uint64_t master_seed = kDefaultMasterSeed;
};

/// The reference link: benzene at 298 K, R = 50 m, v = 4 m/s, tau = 20 us,
/// unit-variance zero-mean receiver noise, intensity levels {4, 5}.
ExperimentConfig paper_defaults();

struct Violation {
  std::string field;   // dotted path, e.g. "link.airflow_speed_v"
  std::string reason;
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<Violation> violations);
  ConfigError(std::string field, std::string reason);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Every violated invariant of cfg, in field order. Empty means valid.
std::vector<Violation> check_config(const ExperimentConfig& cfg);

/// Returns cfg unchanged when valid, otherwise throws ConfigError carrying
/// the complete violation list.
ExperimentConfig validate_config(const ExperimentConfig& cfg);

}  // namespace omc
