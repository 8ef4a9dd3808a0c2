// omc: command-line front end for the odor molecular communication link model.
//
//   omc propagate  --x 50 --t 12.5            field value at (x, t)
//   omc simulate   [--trials-csv path]        per-symbol Monte-Carlo statistics
//   omc capacity                              capacity result as JSON
//   omc sweep      --param v|tau|T|awgn       CSV sweep
//   omc dump-bands                            intensity/concentration bands
//
// Exit status: 0 success, 1 invalid configuration, 2 I/O failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "omc/channel.hpp"
#include "omc/config_io.hpp"
#include "omc/domain.hpp"
#include "omc/infotheory.hpp"
#include "omc/psychophysics.hpp"
#include "omc/simulation.hpp"
#include "omc/sweeps.hpp"

namespace {

using nlohmann::json;

constexpr int kExitInvalidConfig = 1;
constexpr int kExitIo = 2;

// Airflow used by the temperature and noise sweeps unless the user picks one.
constexpr double kSweepAirflowDefault = 2.5;

struct CommonOptions {
  std::string config_path;
  std::string preset = "paper-defaults";
  std::vector<std::string> overrides;
  std::optional<std::uint64_t> seed;
  int threads = 0;
  std::string out_path;
};

struct Resolved {
  omc::ExperimentConfig cfg;
  bool airflow_from_user = false;
};

Resolved resolve_config(const CommonOptions& opt) {
  Resolved r;
  if (!opt.config_path.empty()) {
    r.cfg = omc::load_config(opt.config_path);
    r.airflow_from_user = true;
  } else if (opt.preset == "paper-defaults") {
    r.cfg = omc::paper_defaults();
  } else {
    throw omc::ConfigError("--preset", "unknown preset '" + opt.preset + "'");
  }
  for (const auto& assignment : opt.overrides) {
    r.cfg = omc::apply_override(r.cfg, assignment);
    if (assignment.rfind("link.airflow_speed_v=", 0) == 0) r.airflow_from_user = true;
  }
  if (opt.seed) r.cfg.master_seed = *opt.seed;
  r.cfg = omc::validate_config(r.cfg);
  return r;
}

void emit(const CommonOptions& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw omc::IoError("failed writing to stdout");
    return;
  }
  std::ofstream out(opt.out_path, std::ios::binary);
  if (!out) throw omc::IoError("cannot open output file: " + opt.out_path);
  out << text;
  out.close();
  if (!out) throw omc::IoError("failed writing output file: " + opt.out_path);
}

json stats_json(const omc::SymbolStats& s) {
  return {{"symbol", s.symbol},
          {"mean_mu", s.mean_mu},
          {"std_sigma", s.std_sigma},
          {"trial_count", s.trial_count},
          {"std_error_of_mean", s.std_error_of_mean}};
}

json matrix_json(const omc::DetectionMatrix& m) {
  return {{"P00", m.p00}, {"P01", m.p01}, {"P10", m.p10}, {"P11", m.p11}};
}

std::string format_table(const omc::OiskScheme& scheme) {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "%-14s %-7s %-24s %s\n", "band_type", "symbol", "range",
                "transmit_A");
  os << line;
  for (const auto& s : scheme.symbols()) {
    char range[64];
    std::snprintf(range, sizeof range, "[%.4f,%.4f]", s.band.intensity_lo, s.band.intensity_hi);
    std::snprintf(line, sizeof line, "%-14s %-7zu %-24s %s\n", "intensity", s.index, range, "-");
    os << line;
  }
  for (const auto& s : scheme.symbols()) {
    char range[64];
    char tx[32];
    std::snprintf(range, sizeof range, "[%.4f,%.4f]", s.band.conc_lo, s.band.conc_hi);
    std::snprintf(tx, sizeof tx, "%.4f", s.transmit_concentration_A);
    std::snprintf(line, sizeof line, "%-14s %-7zu %-24s %s\n", "concentration", s.index, range,
                  tx);
    os << line;
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Odor molecular communication link: OISK simulation and channel capacity"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonOptions opt;
  app.add_option("--config", opt.config_path, "JSON configuration file");
  app.add_option("--preset", opt.preset, "Built-in configuration (paper-defaults)");
  app.add_option("--set", opt.overrides, "Override a field, e.g. link.airflow_speed_v=2.5")
      ->take_all();
  app.add_option("--seed", opt.seed, "Master seed for the Monte-Carlo streams");
  app.add_option("--threads", opt.threads, "Worker thread cap (0 = OpenMP default)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--out", opt.out_path, "Write output to this file instead of stdout");

  auto* propagate = app.add_subcommand("propagate", "Evaluate the channel field at (x, t)");
  double x = 0.0;
  double t = 0.0;
  std::optional<std::size_t> prop_symbol;
  std::optional<double> prop_D;
  propagate->add_option("--x", x, "Distance from Tx in metres")->required();
  propagate->add_option("--t", t, "Time in seconds")->required();
  propagate->add_option("--symbol", prop_symbol, "Symbol whose transmit level is used (default: highest)");
  propagate->add_option("--D", prop_D, "Diffusion coefficient (default: mid-range at T)");

  auto* simulate = app.add_subcommand("simulate", "Per-symbol Monte-Carlo statistics");
  std::string trials_csv;
  std::optional<std::size_t> sim_symbol;
  simulate->add_option("--trials-csv", trials_csv, "Dump every trial of one symbol as CSV");
  simulate->add_option("--symbol", sim_symbol, "Symbol for --trials-csv (default: highest)");

  auto* capacity = app.add_subcommand("capacity", "Channel capacity as JSON");

  auto* sweep = app.add_subcommand("sweep", "Parameter sweep to CSV");
  std::string param_name;
  std::vector<double> sweep_values;
  sweep->add_option("--param", param_name, "Swept parameter")
      ->required()
      ->check(CLI::IsMember({"v", "tau", "T", "awgn"}));
  sweep->add_option("--values", sweep_values, "Comma-separated values (default: built-in grid)")
      ->delimiter(',');

  auto* dump_bands = app.add_subcommand("dump-bands", "Intensity and concentration bands");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    Resolved resolved = resolve_config(opt);
    const omc::ExperimentConfig& cfg = resolved.cfg;
    const omc::ExecutionOptions exec{opt.threads};
    const omc::OiskScheme scheme = omc::build_scheme(cfg);

    if (*propagate) {
      const std::size_t symbol = prop_symbol.value_or(scheme.size() - 1);
      if (symbol >= scheme.size()) {
        throw omc::ConfigError("--symbol", "symbol not in scheme");
      }
      const auto range = omc::diffusion_range_at(cfg.odorant, cfg.link.temperature_T);
      omc::ChannelParams p{scheme[symbol].transmit_concentration_A, cfg.link.tx_rx_separation_R,
                           cfg.link.airflow_speed_v, cfg.link.symbol_period_tau,
                           prop_D.value_or(0.5 * (range.lo + range.hi))};
      p.check();
      if (!(x >= 0.0 && x <= p.R && t >= 0.0)) {
        throw omc::ConfigError("--x/--t", "need 0 <= x <= R and t >= 0");
      }
      const json out = {{"x", x},
                        {"t", t},
                        {"A", p.initial_concentration_A},
                        {"D", p.D},
                        {"phi", omc::concentration_at(x, t, p)}};
      emit(opt, out.dump(2) + "\n");
    } else if (*simulate) {
      json symbols = json::array();
      for (std::size_t s = 0; s < scheme.size(); ++s) {
        const auto run = omc::run_symbol_trials(scheme, s, cfg, exec);
        json entry = stats_json(run.stats);
        entry["outcome_counts"] = run.outcome_counts;
        symbols.push_back(std::move(entry));
      }
      emit(opt, json{{"symbols", symbols}}.dump(2) + "\n");
      if (!trials_csv.empty()) {
        const std::size_t symbol = sim_symbol.value_or(scheme.size() - 1);
        if (symbol >= scheme.size()) {
          throw omc::ConfigError("--symbol", "symbol not in scheme");
        }
        std::ofstream csv(trials_csv, std::ios::binary);
        if (!csv) throw omc::IoError("cannot open trial CSV: " + trials_csv);
        omc::write_trial_csv(csv, omc::collect_trial_records(scheme, symbol, cfg, exec));
        csv.close();
        if (!csv) throw omc::IoError("failed writing trial CSV: " + trials_csv);
      }
    } else if (*capacity) {
      const auto result = omc::capacity_pipeline(cfg, exec);
      json stats = json::array();
      for (const auto& s : result.stats) stats.push_back(stats_json(s));
      const auto erasure = omc::erasure_channel_capacity(result.capacity.matrix);
      const json out = {
          {"capacity", result.capacity.capacity},
          {"alpha_star", result.capacity.alpha_star},
          {"matrix", matrix_json(result.capacity.matrix)},
          {"stats", stats},
          {"erasure_channel_comparison",
           {{"capacity", erasure.capacity}, {"alpha_star", erasure.alpha_star}}},
      };
      emit(opt, out.dump(2) + "\n");
    } else if (*sweep) {
      const auto param = *omc::parse_sweep_parameter(param_name);
      omc::ExperimentConfig sweep_cfg = cfg;
      if ((param == omc::SweepParameter::temperature || param == omc::SweepParameter::awgn_std) &&
          !resolved.airflow_from_user) {
        sweep_cfg.link.airflow_speed_v = kSweepAirflowDefault;
      }
      if (sweep_values.empty()) sweep_values = omc::default_sweep_values(param);
      const auto result = omc::run_sweep(param, sweep_values, sweep_cfg, exec);
      for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
      std::ostringstream csv;
      omc::write_sweep_csv(csv, result);
      emit(opt, csv.str());
    } else if (*dump_bands) {
      emit(opt, format_table(scheme));
    }
  } catch (const omc::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const omc::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  }
  return 0;
}
