// Command-line front end: validate | sweep | rate | oracle.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "irs/beamforming.hpp"
#include "irs/channel.hpp"
#include "irs/errors.hpp"
#include "irs/estimation.hpp"
#include "irs/harness.hpp"
#include "irs/simulator.hpp"

namespace {

struct CommonOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<int> workers;
};

irs::ExperimentConfig load(const CommonOptions& opt) {
  irs::ExperimentConfig cfg = opt.config_path.empty() ? irs::ExperimentConfig{} : irs::load_config(opt.config_path);
  if (opt.seed) cfg.system.seed = *opt.seed;
  if (opt.trials) cfg.system.trials = *opt.trials;
  if (opt.workers) cfg.workers = *opt.workers;
  cfg.validate();
  return cfg;
}

void add_common(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--config", opt.config_path, "Config file (key = value lines)")->check(CLI::ExistingFile);
  cmd->add_option("--seed", opt.seed, "Override the config seed");
  cmd->add_option("--trials", opt.trials, "Override the Monte Carlo trial count");
  cmd->add_option("--workers", opt.workers, "Worker threads for Monte Carlo");
}

class Checklist {
 public:
  void check(bool ok, const std::string& name, const std::string& detail = {}) {
    std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.empty() ? "" : ": ", detail.c_str());
    failures_ += ok ? 0 : 1;
  }
  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

int run_validate(const irs::ExperimentConfig& cfg) {
  Checklist list;
  for (const irs::SweepPoint& point : cfg.effective_sweep()) {
    const irs::Scenario sc = irs::build_scenario(cfg, point);
    const auto& s = sc.stats;
    std::printf("scenario %s (seed %llu, NL = %d, M = %d, xi = %s)\n", sc.id.c_str(),
                static_cast<unsigned long long>(sc.seed), s.total_elements(), s.antennas, fmt(sc.matrices.xi).c_str());

    double los_defect = 0.0;
    los_defect = std::max(los_defect, (s.los_bs_irs.cwiseAbs().array() - 1.0).abs().maxCoeff());
    los_defect = std::max(los_defect, (s.los_irs_user.cwiseAbs().array() - 1.0).abs().maxCoeff());
    list.check(los_defect < 1e-12, "LoS factors unit modulus", "max defect " + fmt(los_defect));

    const double r_herm = irs::hermitian_defect(s.correlation);
    const double r_min = irs::min_eigenvalue(s.correlation);
    list.check(r_herm < 1e-12 && r_min >= -1e-10, "R Hermitian PSD", "min eigenvalue " + fmt(r_min));

    bool block_ok = true;
    const int l = s.elements_per_irs;
    for (int i = 0; i < s.total_elements(); ++i)
      for (int j = 0; j < s.total_elements(); ++j)
        if (i / l != j / l && s.correlation(i, j) != irs::Complex(0.0)) block_ok = false;
    list.check(block_ok, "R block diagonal", std::to_string(s.irs_count) + " blocks of " + std::to_string(l));

    const double c_min = irs::min_eigenvalue(sc.matrices.c);
    list.check(irs::hermitian_defect(sc.matrices.c) < 1e-12 && c_min >= -1e-10 * sc.matrices.c.norm(),
               "C Hermitian PSD", "min eigenvalue " + fmt(c_min));
    const double q_min = irs::min_eigenvalue(sc.matrices.q);
    list.check(q_min > 0.0, "Q_eff positive definite", "min eigenvalue " + fmt(q_min));

    irs::Rng rng = irs::Rng::stream(sc.seed, 99);
    const irs::ChannelRealization real = irs::sample_channels(s, rng);
    const irs::ReflectionVector v = irs::random_reflection(s.total_elements(), rng);
    const irs::CVector f = rng.complex_normal_vector(s.antennas);
    const irs::Complex stacked = (v.values().adjoint() * real.cascade * f)(0, 0);
    irs::Complex per_irs = 0.0;
    for (int n = 0; n < s.irs_count; ++n) {
      for (int i = 0; i < l; ++i) {
        const int k = n * l + i;
        per_irs += real.irs_user_diag(k) * std::conj(v.values()(k)) * (real.bs_irs.row(k) * f)(0, 0);
      }
    }
    list.check(std::abs(stacked - per_irs) <= 1e-10 * std::max(1.0, std::abs(stacked)),
               "stacked cascade matches per-IRS sum", "gap " + fmt(std::abs(stacked - per_irs)));

    const irs::CsiEstimates est = irs::sample_estimates(real, sc.matrices.xi, rng);
    const double decomposition = (est.cascade_hat + est.cascade_error - real.cascade).cwiseAbs().maxCoeff();
    list.check(decomposition <= 1e-12, "estimate + error = channel", "gap " + fmt(decomposition));

    const irs::ReflectionVector design = irs::statistical_reflection(sc.matrices);
    const double p = sc.system.transmit_power;
    const double r_design = irs::theorem1_rate(design, sc.matrices, p);
    const double r_random = irs::theorem1_rate(v, sc.matrices, p);
    list.check(r_design >= r_random, "statistical design >= random reflection",
               fmt(r_design) + " vs " + fmt(r_random) + " bits/s/Hz");
  }
  std::printf("%d check(s) failed\n", list.failures());
  return list.failures() == 0 ? 0 : 1;
}

int run_sweep_cmd(const irs::ExperimentConfig& cfg, const std::string& out) {
  const auto rows = irs::run_sweep(cfg);
  if (out.empty()) {
    std::cout << irs::format_csv(rows);
  } else {
    irs::emit_csv(rows, out);
    std::fprintf(stderr, "wrote %zu row(s) to %s\n", rows.size(), out.c_str());
  }
  return 0;
}

int run_rate(const irs::ExperimentConfig& cfg) {
  for (const irs::SweepPoint& point : cfg.effective_sweep()) {
    const irs::Scenario sc = irs::build_scenario(cfg, point);
    const double p = sc.system.transmit_power;
    const double s2 = sc.system.noise_variance;
    std::printf("scenario %s: M = %d, N = %d, L = %d, xi = %s\n", sc.id.c_str(), sc.stats.antennas,
                sc.stats.irs_count, sc.stats.elements_per_irs, fmt(sc.matrices.xi).c_str());
    for (irs::Method m : cfg.methods) {
      if (m == irs::Method::random && cfg.random_per_trial) continue;
      const irs::ReflectionVector v = irs::design_reflection(cfg, sc, m);
      std::printf("  %-12s closed-form rate %.9g bits/s/Hz\n", std::string(irs::method_name(m)).c_str(),
                  irs::theorem1_rate(v, sc.matrices, p));
    }
    // The closed forms below assume a single-antenna BS and perfect CSI.
    const irs::IrsGains gains = irs::IrsGains::from(sc.stats);
    const int l = sc.stats.elements_per_irs;
    if (sc.stats.antennas == 1)
      std::printf("  lemma2 (perfect CSI, uncorrelated) %.9g\n", irs::lemma2_rate(gains, l, p, s2));
    const char* note = sc.stats.antennas == 1 ? "" : ", as if M = 1";
    std::printf("  case1 (pure LoS, as published%s) %.9g\n", note,
                irs::case1_rate(gains.user_gain, gains.bs_gain, l, p, s2));
    std::printf("  case2 (Rayleigh%s) %.9g\n", note, irs::case2_rate(gains.user_gain, gains.bs_gain, l, p, s2));
  }
  return 0;
}

int run_oracle(const irs::ExperimentConfig& cfg, int levels) {
  int worse = 0;
  for (const irs::SweepPoint& point : cfg.effective_sweep()) {
    const irs::Scenario sc = irs::build_scenario(cfg, point);
    const double p = sc.system.transmit_power;
    const double solver = irs::theorem1_rate(irs::statistical_reflection(sc.matrices), sc.matrices, p);
    const double grid = irs::theorem1_rate(irs::grid_search_reflection(sc.matrices, p, levels), sc.matrices, p);
    const double ratio = solver / grid;
    std::printf("%s: solver %.9g, grid(%d levels) %.9g, ratio %.6f\n", sc.id.c_str(), solver, levels, grid, ratio);
    if (ratio < 0.95) ++worse;
  }
  return worse == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distributed-IRS MISO downlink: statistical reflection design and ergodic rate evaluation"};
  app.require_subcommand(1);

  CommonOptions validate_opt, sweep_opt, rate_opt, oracle_opt;
  std::string out_path;
  int levels = 0;

  auto* validate = app.add_subcommand("validate", "Build each scenario and check model invariants");
  add_common(validate, validate_opt);
  auto* sweep = app.add_subcommand("sweep", "Run the configured sweep and write CSV");
  add_common(sweep, sweep_opt);
  sweep->add_option("--out", out_path, "Output CSV path (standard output when omitted)");
  auto* rate = app.add_subcommand("rate", "Print closed-form rates for the configured scenarios");
  add_common(rate, rate_opt);
  auto* oracle = app.add_subcommand("oracle", "Compare the statistical design against exhaustive phase search");
  add_common(oracle, oracle_opt);
  oracle->add_option("--levels", levels, "Phase levels per element (default: grid_levels from config)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*validate) return run_validate(load(validate_opt));
    if (*sweep) return run_sweep_cmd(load(sweep_opt), out_path);
    if (*rate) return run_rate(load(rate_opt));
    if (*oracle) {
      const auto cfg = load(oracle_opt);
      return run_oracle(cfg, levels > 0 ? levels : cfg.grid_levels);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
