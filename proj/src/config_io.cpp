#include "omc/config_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace omc {

using nlohmann::json;

namespace {

json to_json(const ExperimentConfig& cfg) {
  const auto& od = cfg.odorant;
  return json{
      {"odorant",
       {{"name", od.name},
        {"weber_fechner_k", od.weber_fechner_k},
        {"intensity_intercept_d", od.intensity_intercept_d},
        {"diffusion_min", od.diffusion_min},
        {"diffusion_max", od.diffusion_max},
        {"reference_temperature", od.reference_temperature},
        {"comment", od.comment}}},
      {"link",
       {{"tx_rx_separation_R", cfg.link.tx_rx_separation_R},
        {"airflow_speed_v", cfg.link.airflow_speed_v},
        {"symbol_period_tau", cfg.link.symbol_period_tau},
        {"temperature_T", cfg.link.temperature_T}}},
      {"noise",
       {{"awgn_mean_mu_n", cfg.noise.awgn_mean_mu_n},
        {"awgn_std_sigma_n", cfg.noise.awgn_std_sigma_n}}},
      {"scheme_levels", cfg.scheme_levels},
      {"intensity_halfwidth", cfg.intensity_halfwidth},
      {"trial_count", cfg.trial_count},
      {"master_seed", cfg.master_seed},
  };
}

// Walks a JSON object, copying recognised keys into the target and recording
// everything else as a violation.
class Reader {
 public:
  void number(const json& obj, const std::string& path, const char* key, double& out) {
    const auto it = obj.find(key);
    if (it == obj.end()) return;
    if (!it->is_number()) {
      bad(path + key, "expected a number");
      return;
    }
    out = it->get<double>();
  }

  void text(const json& obj, const std::string& path, const char* key, std::string& out) {
    const auto it = obj.find(key);
    if (it == obj.end()) return;
    if (!it->is_string()) {
      bad(path + key, "expected a string");
      return;
    }
    out = it->get<std::string>();
  }

  void unsigned64(const json& obj, const std::string& path, const char* key,
                  std::uint64_t& out) {
    const auto it = obj.find(key);
    if (it == obj.end()) return;
    if (!it->is_number_unsigned()) {
      bad(path + key, "expected a non-negative integer");
      return;
    }
    out = it->get<std::uint64_t>();
  }

  void levels(const json& obj, const char* key, std::vector<double>& out) {
    const auto it = obj.find(key);
    if (it == obj.end()) return;
    if (!it->is_array()) {
      bad(key, "expected an array of numbers");
      return;
    }
    std::vector<double> values;
    for (const auto& item : *it) {
      if (!item.is_number()) {
        bad(key, "expected an array of numbers");
        return;
      }
      values.push_back(item.get<double>());
    }
    out = std::move(values);
  }

  const json* section(const json& obj, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) return nullptr;
    if (!it->is_object()) {
      bad(key, "expected an object");
      return nullptr;
    }
    return &*it;
  }

  void reject_unknown(const json& obj, const std::string& path,
                      std::initializer_list<std::string_view> known) {
    for (const auto& [key, _] : obj.items()) {
      bool found = false;
      for (auto k : known) found = found || key == k;
      if (!found) bad(path + key, "unknown key");
    }
  }

  void bad(std::string field, std::string reason) {
    violations.push_back({std::move(field), std::move(reason)});
  }

  std::vector<Violation> violations;
};

ExperimentConfig from_json(const json& root) {
  Reader r;
  ExperimentConfig cfg = paper_defaults();
  if (!root.is_object()) {
    r.bad("<root>", "configuration must be a JSON object");
    throw ConfigError(std::move(r.violations));
  }

  r.reject_unknown(root, "",
                   {"odorant", "link", "noise", "scheme_levels", "intensity_halfwidth",
                    "trial_count", "master_seed"});

  if (const json* od = r.section(root, "odorant")) {
    r.reject_unknown(*od, "odorant.",
                     {"name", "weber_fechner_k", "intensity_intercept_d", "diffusion_min",
                      "diffusion_max", "reference_temperature", "comment"});
    r.text(*od, "odorant.", "name", cfg.odorant.name);
    r.number(*od, "odorant.", "weber_fechner_k", cfg.odorant.weber_fechner_k);
    r.number(*od, "odorant.", "intensity_intercept_d", cfg.odorant.intensity_intercept_d);
    r.number(*od, "odorant.", "diffusion_min", cfg.odorant.diffusion_min);
    r.number(*od, "odorant.", "diffusion_max", cfg.odorant.diffusion_max);
    r.number(*od, "odorant.", "reference_temperature", cfg.odorant.reference_temperature);
    r.text(*od, "odorant.", "comment", cfg.odorant.comment);
  }
  if (const json* link = r.section(root, "link")) {
    r.reject_unknown(*link, "link.",
                     {"tx_rx_separation_R", "airflow_speed_v", "symbol_period_tau",
                      "temperature_T"});
    r.number(*link, "link.", "tx_rx_separation_R", cfg.link.tx_rx_separation_R);
    r.number(*link, "link.", "airflow_speed_v", cfg.link.airflow_speed_v);
    r.number(*link, "link.", "symbol_period_tau", cfg.link.symbol_period_tau);
    r.number(*link, "link.", "temperature_T", cfg.link.temperature_T);
  }
  if (const json* noise = r.section(root, "noise")) {
    r.reject_unknown(*noise, "noise.", {"awgn_mean_mu_n", "awgn_std_sigma_n"});
    r.number(*noise, "noise.", "awgn_mean_mu_n", cfg.noise.awgn_mean_mu_n);
    r.number(*noise, "noise.", "awgn_std_sigma_n", cfg.noise.awgn_std_sigma_n);
  }
  r.levels(root, "scheme_levels", cfg.scheme_levels);
  r.number(root, "", "intensity_halfwidth", cfg.intensity_halfwidth);
  r.unsigned64(root, "", "trial_count", cfg.trial_count);
  r.unsigned64(root, "", "master_seed", cfg.master_seed);

  if (!r.violations.empty()) throw ConfigError(std::move(r.violations));
  return cfg;
}

}  // namespace

ExperimentConfig parse_config(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("<root>", std::string("malformed JSON: ") + e.what());
  }
  return from_json(root);
}

std::string serialize_config(const ExperimentConfig& cfg) {
  return to_json(cfg).dump(2) + "\n";
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed reading config file: " + path.string());
  return parse_config(buffer.str());
}

ExperimentConfig apply_override(const ExperimentConfig& cfg, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw ConfigError(std::string(assignment), "override must have the form key=value");
  }
  const std::string key(assignment.substr(0, eq));
  const std::string raw(assignment.substr(eq + 1));

  json value = json::parse(raw, nullptr, /*allow_exceptions=*/false);
  if (value.is_discarded()) value = raw;

  std::string pointer = "/" + key;
  for (auto& ch : pointer) {
    if (ch == '.') ch = '/';
  }

  json doc = to_json(cfg);
  const json::json_pointer ptr(pointer);
  if (!doc.contains(ptr)) throw ConfigError(key, "unknown key");
  doc[ptr] = std::move(value);
  return from_json(doc);
}

}  // namespace omc
