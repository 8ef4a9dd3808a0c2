// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "omc/channel.hpp"
#include "omc/domain.hpp"
#include "omc/infotheory.hpp"
#include "omc/psychophysics.hpp"
#include "omc/simulation.hpp"
#include "omc/sweeps.hpp"
#include "oracles.hpp"

using namespace omc;

namespace {

int failures = 0;

void report(int id, const char* title, bool ok, const std::string& detail) {
  std::printf("criterion %d [%s] %s: %s\n", id, ok ? "PASS" : "FAIL", title, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

bool near(double value, double target, double tol) { return std::fabs(value - target) <= tol; }

ExperimentConfig at(double v, double sigma_n = 1.0) {
  auto cfg = paper_defaults();
  cfg.link.airflow_speed_v = v;
  cfg.noise.awgn_std_sigma_n = sigma_n;
  return cfg;
}

void bands() {
  const auto scheme = build_scheme(paper_defaults());
  const double expected[2][2] = {{17.9815, 28.0463}, {43.7448, 68.2320}};
  bool ok = true;
  std::ostringstream os;
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& b = scheme[i].band;
    const double got[2] = {b.conc_lo, b.conc_hi};
    for (int k = 0; k < 2; ++k) {
      const bool hit = near(got[k], expected[i][k], 5e-4);
      ok = ok && hit;
      if (!hit) os << "got " << fmt("%.6f", got[k]) << " want " << expected[i][k] << "; ";
    }
  }
  os << "bands [" << fmt("%.4f", scheme[0].band.conc_lo) << ", "
     << fmt("%.4f", scheme[0].band.conc_hi) << "] [" << fmt("%.4f", scheme[1].band.conc_lo)
     << ", " << fmt("%.4f", scheme[1].band.conc_hi) << "]";
  report(1, "concentration bands", ok, os.str());
}

void table_cells() {
  struct Cell {
    const char* label;
    double v, tau, mean, std;
  };
  const Cell cells[] = {
      {"v=0.5", 0.5, 20e-6, 0.0, 0.0},           {"v=1", 1.0, 20e-6, 3.5967, 1.5541},
      {"v=1.5", 1.5, 20e-6, 39.4832, 0.7017},    {"v=2", 2.0, 20e-6, 52.0722, 0.3946},
      {"v=2.5", 2.5, 20e-6, 57.9014, 0.2435},    {"v=3", 3.0, 20e-6, 61.0535, 0.1734},
      {"v=3.5", 3.5, 20e-6, 62.9527, 0.1272},    {"v=4", 4.0, 20e-6, 64.1877, 0.0976},
      {"tau=1ns", 4.0, 1e-9, 0.0, 0.0},          {"tau=1us", 4.0, 1e-6, 0.0, 0.0},
      {"tau=2us", 4.0, 2e-6, 27.8954, 0.9884},   {"tau=5us", 4.0, 5e-6, 52.0643, 0.3895},
      {"tau=10us", 4.0, 10e-6, 60.1434, 0.1952}, {"tau=20us", 4.0, 20e-6, 64.1969, 0.0956},
      {"tau=100us", 4.0, 100e-6, 67.4241, 0.0194}, {"tau=1ms", 4.0, 1e-3, 68.1513, 0.0020},
  };
  bool ok = true;
  int passed = 0;
  std::ostringstream misses;
  for (const auto& c : cells) {
    auto cfg = at(c.v, 0.0);
    cfg.link.symbol_period_tau = c.tau;
    const auto scheme = build_scheme(cfg);
    const auto s = run_symbol_trials(scheme, 1, cfg).stats;
    const bool exact_zero = c.mean == 0.0;
    const bool hit = exact_zero ? (s.mean_mu == 0.0 && s.std_sigma == 0.0)
                                : (near(s.mean_mu, c.mean, 0.1) && near(s.std_sigma, c.std, 0.01));
    if (hit) {
      ++passed;
    } else {
      ok = false;
      misses << " " << c.label << " got " << fmt("%.4f", s.mean_mu) << "("
             << fmt("%.4f", s.std_sigma) << ") want " << c.mean << "(" << c.std << ");";
    }
  }
  std::ostringstream os;
  os << passed << "/16 cells within tolerance" << misses.str();
  report(2, "noiseless airflow and symbol-period table", ok, os.str());
}

void default_stats() {
  const auto cfg = paper_defaults();
  const auto r = capacity_pipeline(cfg);
  const auto& s0 = r.stats[0];
  const auto& s1 = r.stats[1];
  const bool ok = near(s0.mean_mu, 26.39, 0.05) && near(s0.std_sigma, 1.00, 0.02) &&
                  near(s1.mean_mu, 64.19, 0.05) && near(s1.std_sigma, 1.005, 0.02);
  report(3, "received statistics at defaults", ok,
         "mu0=" + fmt("%.4f", s0.mean_mu) + " sigma0=" + fmt("%.4f", s0.std_sigma) +
             " mu1=" + fmt("%.4f", s1.mean_mu) + " sigma1=" + fmt("%.4f", s1.std_sigma));
}

void detection() {
  const auto cfg = paper_defaults();
  const auto scheme = build_scheme(cfg);
  const auto r = capacity_pipeline(cfg);
  const auto& m = r.capacity.matrix;
  bool ok = near(m.p00, 0.9518, 0.003) && near(m.p11, 0.99997, 5e-4) && m.p01 < 1e-10 &&
            m.p10 < 1e-10;
  const auto emp = empirical_detection_matrix(scheme, cfg);
  const double n = static_cast<double>(emp.trials_per_symbol);
  const double analytic[2][2] = {{m.p00, m.p10}, {m.p01, m.p11}};  // [input][output]
  double worst = 0.0;
  for (std::size_t in = 0; in < 2; ++in) {
    for (std::size_t out = 0; out < 2; ++out) {
      const double p = analytic[in][out];
      const double se = std::sqrt(p * (1.0 - p) / n);
      const double dev = std::fabs(emp.frequency(in, out) - p);
      if (se > 0.0) {
        worst = std::max(worst, dev / se);
        ok = ok && dev <= 3.0 * se;
      } else {
        ok = ok && dev == 0.0;
      }
    }
  }
  report(4, "detection probabilities", ok,
         "P00=" + fmt("%.6f", m.p00) + " P01=" + fmt("%.3g", m.p01) + " P10=" +
             fmt("%.3g", m.p10) + " P11=" + fmt("%.6f", m.p11) +
             " worst empirical deviation " + fmt("%.2f", worst) + " SE");
}

void capacity() {
  const auto r = capacity_pipeline(paper_defaults());
  const auto ref = channel_capacity({0.951849, 0.0, 0.0, 0.999968});
  const bool ok = near(r.capacity.capacity, 0.976, 0.003) && r.capacity.alpha_star >= 0.5 &&
                  r.capacity.alpha_star <= 0.51 && near(ref.capacity, 0.9759, 5e-4);
  report(5, "capacity at defaults", ok,
         "C=" + fmt("%.5f", r.capacity.capacity) + " alpha*=" + fmt("%.5f", r.capacity.alpha_star) +
             " C(reference matrix)=" + fmt("%.5f", ref.capacity));
}

void airflow() {
  const auto s = sweep_airflow({2.5, 4.0}, paper_defaults());
  const double c25 = s.rows[0].capacity.capacity;
  const double c4 = s.rows[1].capacity.capacity;
  report(6, "airflow sweep", c25 >= 0.999 && c25 > c4,
         "C(2.5)=" + fmt("%.6f", c25) + " C(4)=" + fmt("%.6f", c4));
}

void temperature() {
  const auto s = sweep_temperature(default_sweep_values(SweepParameter::temperature), at(2.5));
  double lowest = 1.0;
  for (const auto& row : s.rows) lowest = std::min(lowest, row.capacity.capacity);
  const double c400 = s.rows.back().capacity.capacity;
  const bool ok = s.rows.back().value == 400.0 && lowest >= 0.999 && near(c400, 0.99905, 5e-4);
  report(7, "temperature sweep", ok,
         std::to_string(s.rows.size()) + " points, min C=" + fmt("%.6f", lowest) +
             " C(400 K)=" + fmt("%.6f", c400));
}

void awgn() {
  const auto s = sweep_awgn(default_sweep_values(SweepParameter::awgn_std), at(2.5));
  bool monotone = true;
  double c3 = -1.0;
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    if (s.rows[i].value == 3.0) c3 = s.rows[i].capacity.capacity;
    if (i > 0 && s.rows[i].capacity.capacity > s.rows[i - 1].capacity.capacity) monotone = false;
  }
  report(8, "receiver noise sweep", near(c3, 0.95, 0.01) && monotone,
         "C(sigma=3)=" + fmt("%.5f", c3) + (monotone ? " non-increasing" : " NOT monotone") +
             " C(4)=" + fmt("%.5f", s.rows.back().capacity.capacity));
}

ChannelParams random_params(oracle::Lcg& rng) {
  return {rng.uniform(0.1, 1000.0), rng.uniform(0.01, 200.0), rng.uniform(0.05, 20.0),
          std::pow(10.0, rng.uniform(-9.0, -1.0)), std::pow(10.0, rng.uniform(-7.0, -3.0))};
}

void properties() {
  std::vector<std::string> broken;
  oracle::Lcg rng(2024);

  bool bc = true;
  for (int i = 0; i < 1000; ++i) {
    const auto p = random_params(rng);
    const double A = p.initial_concentration_A;
    bc = bc && std::fabs(concentration_unclamped(0.0, 0.0, p) - A) <= 1e-12 * A &&
         std::fabs(concentration_unclamped(p.R, 0.0, p)) <= 1e-12 * A &&
         std::fabs(concentration_unclamped(0.0, p.tau, p)) <= 1e-12 * A;
  }
  if (!bc) broken.push_back("boundary conditions");

  bool pde = true;
  for (int i = 0; i < 1000; ++i) {
    const ChannelParams p{rng.uniform(10.0, 100.0), rng.uniform(10.0, 100.0),
                          rng.uniform(0.5, 10.0), std::pow(10.0, rng.uniform(-6.0, -3.0)),
                          rng.uniform(9.0e-6, 1.0e-5)};
    const double h = 1e-3;
    const double x = rng.uniform(2.0 * h, p.R - 2.0 * h);
    const double t = rng.uniform(2.0 * h, 2.0 * p.R / p.v);
    const double bound = 1e-6 * p.initial_concentration_A / p.tau;
    pde = pde && std::fabs(pde_residual(x, t, p, h)) < bound;
    // Negative control: a wrong diffusion coefficient must be caught.
    pde = pde && std::fabs(pde_residual(x, t, p, h, p.D * 1e3)) > bound;
  }
  if (!pde) broken.push_back("PDE residual or negative control");

  const OdorantSpec odorant;
  bool wf = true;
  for (int i = 0; i < 10000; ++i) {
    const double c = std::pow(10.0, rng.uniform(-6.0, 6.0));
    wf = wf && std::fabs(concentration_of(intensity_of(c, odorant), odorant) - c) <= 1e-12 * c;
  }
  if (!wf) broken.push_back("Weber-Fechner round trip");

  auto cfg = paper_defaults();
  cfg.trial_count = 100003;
  const auto scheme = build_scheme(cfg);
  bool det = true;
  for (std::size_t sym = 0; sym < 2; ++sym) {
    const auto one = run_symbol_trials(scheme, sym, cfg, {1});
    for (int threads : {2, 8}) {
      const auto other = run_symbol_trials(scheme, sym, cfg, {threads});
      det = det && other.stats.mean_mu == one.stats.mean_mu &&
            other.stats.std_sigma == one.stats.std_sigma &&
            other.outcome_counts == one.outcome_counts;
    }
  }
  if (!det) broken.push_back("worker-count determinism");

  bool mi = true;
  for (int i = 0; i < 2000; ++i) {
    const double a = rng.uniform();
    const double b = rng.uniform(0.0, 1.0 - a);
    const double c = rng.uniform();
    const double d = rng.uniform(0.0, 1.0 - c);
    const DetectionMatrix m{a, c, b, d};
    const double a1 = rng.uniform();
    const double a2 = rng.uniform();
    const double mid = mutual_information(m, 0.5 * (a1 + a2));
    mi = mi && mid >= 0.5 * (mutual_information(m, a1) + mutual_information(m, a2)) - 1e-12;
    mi = mi && std::fabs(mutual_information(m.swapped(), 1.0 - a1) - mutual_information(m, a1)) <=
                   1e-12;
  }
  if (!mi) broken.push_back("mutual information concavity or label swap");

  std::string detail = "boundary, PDE, round-trip, determinism, concavity, label swap";
  if (!broken.empty()) {
    detail = "broken:";
    for (const auto& b : broken) detail += " " + b + ";";
  }
  report(9, "property suite", broken.empty(), detail);
}

}  // namespace

int main() {
  bands();
  table_cells();
  default_stats();
  detection();
  capacity();
  airflow();
  temperature();
  awgn();
  properties();
  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
