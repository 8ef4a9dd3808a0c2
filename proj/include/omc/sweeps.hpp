#pragma once

// One-parameter sweeps over the capacity pipeline.
//
// Every row reuses cfg.master_seed unchanged, so all rows see the same
// per-trial random numbers (common random numbers). A row therefore depends
// only on its own parameter value: re-running one value alone, or running
// the rows in any order, reproduces it exactly.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omc/domain.hpp"
#include "omc/infotheory.hpp"
#include "omc/simulation.hpp"

namespace omc {

enum class SweepParameter { airflow_speed, symbol_period, temperature, awgn_std };

/// CLI selector name: "v", "tau", "T" or "awgn".
std::string_view sweep_parameter_name(SweepParameter p) noexcept;
std::optional<SweepParameter> parse_sweep_parameter(std::string_view name) noexcept;

/// Default grid for each parameter: the airflow and symbol-period sets of
/// the v/tau study, T over [290, 400] K in 5 K steps, sigma_n over [1, 4] in
/// steps of 0.25.
std::vector<double> default_sweep_values(SweepParameter p);

/// Copy of cfg with the swept field replaced.
ExperimentConfig with_sweep_value(const ExperimentConfig& cfg, SweepParameter p, double value);

struct SweepRow {
  double value = 0.0;
  std::vector<SymbolStats> stats;
  CapacityResult capacity;
};

struct SweepResult {
  SweepParameter parameter = SweepParameter::airflow_speed;
  std::vector<SweepRow> rows;  // ascending by value
  std::vector<std::string> warnings;
};

/// Runs capacity_pipeline for each value. Values are sorted ascending.
/// Throws std::invalid_argument for values outside the parameter's domain
/// (v, tau, T must be positive; sigma_n non-negative). Temperatures outside
/// [290, 400] K run but add a warning.
SweepResult run_sweep(SweepParameter p, std::vector<double> values, const ExperimentConfig& cfg,
                      ExecutionOptions exec = {});

SweepResult sweep_airflow(std::vector<double> values, const ExperimentConfig& cfg,
                          ExecutionOptions exec = {});
SweepResult sweep_symbol_period(std::vector<double> values, const ExperimentConfig& cfg,
                                ExecutionOptions exec = {});
SweepResult sweep_temperature(std::vector<double> values, const ExperimentConfig& cfg,
                              ExecutionOptions exec = {});
SweepResult sweep_awgn(std::vector<double> values, const ExperimentConfig& cfg,
                       ExecutionOptions exec = {});

/// CSV: "<param>,mu0,sigma0,mu1,sigma1,P00,P01,P10,P11,alpha_star,capacity",
/// then one line per row, numbers at 6 significant digits.
void write_sweep_csv(std::ostream& out, const SweepResult& result);

}  // namespace omc
