#include "omc/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace omc {

namespace {

constexpr double kFullerValidLo = 290.0;
constexpr double kFullerValidHi = 400.0;

std::vector<double> linear_grid(double lo, double hi, double step) {
  std::vector<double> out;
  const auto n = static_cast<int>(std::lround((hi - lo) / step));
  for (int i = 0; i <= n; ++i) out.push_back(lo + step * i);
  return out;
}

void check_value(SweepParameter p, double value) {
  const bool ok = p == SweepParameter::awgn_std ? (std::isfinite(value) && value >= 0.0)
                                                : (std::isfinite(value) && value > 0.0);
  if (!ok) {
    throw std::invalid_argument("sweep " + std::string(sweep_parameter_name(p)) +
                                ": invalid value " + std::to_string(value));
  }
}

}  // namespace

std::string_view sweep_parameter_name(SweepParameter p) noexcept {
  switch (p) {
    case SweepParameter::airflow_speed: return "v";
    case SweepParameter::symbol_period: return "tau";
    case SweepParameter::temperature: return "T";
    case SweepParameter::awgn_std: return "awgn";
  }
  return "?";
}

std::optional<SweepParameter> parse_sweep_parameter(std::string_view name) noexcept {
  for (auto p : {SweepParameter::airflow_speed, SweepParameter::symbol_period,
                 SweepParameter::temperature, SweepParameter::awgn_std}) {
    if (sweep_parameter_name(p) == name) return p;
  }
  return std::nullopt;
}

std::vector<double> default_sweep_values(SweepParameter p) {
  switch (p) {
    case SweepParameter::airflow_speed: return {0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0};
    case SweepParameter::symbol_period:
      return {1e-9, 1e-6, 2e-6, 5e-6, 10e-6, 20e-6, 100e-6, 1e-3};
    case SweepParameter::temperature: return linear_grid(kFullerValidLo, kFullerValidHi, 5.0);
    case SweepParameter::awgn_std: return linear_grid(1.0, 4.0, 0.25);
  }
  return {};
}

ExperimentConfig with_sweep_value(const ExperimentConfig& cfg, SweepParameter p, double value) {
  ExperimentConfig out = cfg;
  switch (p) {
    case SweepParameter::airflow_speed: out.link.airflow_speed_v = value; break;
    case SweepParameter::symbol_period: out.link.symbol_period_tau = value; break;
    case SweepParameter::temperature: out.link.temperature_T = value; break;
    case SweepParameter::awgn_std: out.noise.awgn_std_sigma_n = value; break;
  }
  return out;
}

SweepResult run_sweep(SweepParameter p, std::vector<double> values, const ExperimentConfig& cfg,
                      ExecutionOptions exec) {
  for (double v : values) check_value(p, v);
  std::sort(values.begin(), values.end());

  SweepResult result;
  result.parameter = p;
  for (double value : values) {
    if (p == SweepParameter::temperature && (value < kFullerValidLo || value > kFullerValidHi)) {
      result.warnings.push_back("T = " + std::to_string(value) +
                                " K lies outside the [290, 400] K range of the Fuller scaling");
    }
    auto pipeline = capacity_pipeline(with_sweep_value(cfg, p, value), exec);
    result.rows.push_back({value, std::move(pipeline.stats), pipeline.capacity});
  }
  return result;
}

SweepResult sweep_airflow(std::vector<double> values, const ExperimentConfig& cfg,
                          ExecutionOptions exec) {
  return run_sweep(SweepParameter::airflow_speed, std::move(values), cfg, exec);
}

SweepResult sweep_symbol_period(std::vector<double> values, const ExperimentConfig& cfg,
                                ExecutionOptions exec) {
  return run_sweep(SweepParameter::symbol_period, std::move(values), cfg, exec);
}

SweepResult sweep_temperature(std::vector<double> values, const ExperimentConfig& cfg,
                              ExecutionOptions exec) {
  return run_sweep(SweepParameter::temperature, std::move(values), cfg, exec);
}

SweepResult sweep_awgn(std::vector<double> values, const ExperimentConfig& cfg,
                       ExecutionOptions exec) {
  return run_sweep(SweepParameter::awgn_std, std::move(values), cfg, exec);
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
  out << sweep_parameter_name(result.parameter)
      << ",mu0,sigma0,mu1,sigma1,P00,P01,P10,P11,alpha_star,capacity\n";
  char line[512];
  for (const auto& row : result.rows) {
    const auto& m = row.capacity.matrix;
    std::snprintf(line, sizeof line, "%.6g,%.6g,%.6g,%.6g,%.6g,%.6g,%.6g,%.6g,%.6g,%.6g,%.6g\n",
                  row.value, row.stats.at(0).mean_mu, row.stats.at(0).std_sigma,
                  row.stats.at(1).mean_mu, row.stats.at(1).std_sigma, m.p00, m.p01, m.p10, m.p11,
                  row.capacity.alpha_star, row.capacity.capacity);
    out << line;
  }
}

}  // namespace omc
