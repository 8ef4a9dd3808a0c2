#pragma once

// JSON configuration files. Sections mirror ExperimentConfig field names
// exactly:
//
//   {
//     "odorant": { "name": ..., "weber_fechner_k": ..., ... },
//     "link":    { "tx_rx_separation_R": ..., "airflow_speed_v": ..., ... },
//     "noise":   { "awgn_mean_mu_n": ..., "awgn_std_sigma_n": ... },
//     "scheme_levels": [4, 5],
//     "intensity_halfwidth": 0.25,
//     "trial_count": 100000,
//     "master_seed": 54830686957
//   }
//
// Unknown keys are rejected. Keys that are absent keep their paper-defaults
// value. Parsing does not validate invariants; call validate_config for that.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "omc/domain.hpp"

namespace omc {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws ConfigError on malformed JSON, unknown keys or wrongly typed values.
ExperimentConfig parse_config(std::string_view text);

/// Pretty-printed JSON. Doubles are written with round-trip precision.
std::string serialize_config(const ExperimentConfig& cfg);

/// Throws IoError if the file cannot be read, ConfigError if it does not parse.
ExperimentConfig load_config(const std::filesystem::path& path);

/// Applies a "section.field=value" override, e.g. "link.airflow_speed_v=2.5"
/// or "scheme_levels=[4,5]". The value is read as JSON; anything that is not
/// valid JSON is taken as a string.
ExperimentConfig apply_override(const ExperimentConfig& cfg, std::string_view assignment);

}  // namespace omc
