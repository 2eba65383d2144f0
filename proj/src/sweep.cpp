#include "irs/beamforming.hpp"
#include "irs/errors.hpp"
#include "irs/estimation.hpp"
#include "irs/harness.hpp"
#include "irs/simulator.hpp"

namespace irs {

namespace {

// Stream indices under a scenario seed.
constexpr std::uint64_t kGeometryStream = 0;
constexpr std::uint64_t kRandomReflectionStream = 1;
constexpr std::uint64_t kMonteCarloStream = 2;

}  // namespace

std::string scenario_id(const SweepPoint& point) {
  return "N" + std::to_string(point.irs_count) + "_L" + std::to_string(point.elements_per_irs);
}

Scenario build_scenario(const ExperimentConfig& cfg, const SweepPoint& point) {
  Scenario sc;
  sc.id = scenario_id(point);
  sc.seed = label_seed(cfg.system.seed, sc.id);
  sc.system = cfg.system;
  sc.system.irs_count = point.irs_count;
  sc.system.elements_per_irs = point.elements_per_irs;
  sc.system.validate();

  Rng geometry_rng = Rng::stream(sc.seed, kGeometryStream);
  sc.geometry = sample_geometry(sc.system, geometry_rng);
  sc.stats = build_statistics(sc.system, sc.geometry);
  sc.matrices = build_jq(sc.stats, sc.system.noise_variance, estimation_error_variance(sc.system), cfg.error_model);
  return sc;
}

ReflectionVector design_reflection(const ExperimentConfig& cfg, const Scenario& scenario, Method method) {
  switch (method) {
    case Method::statistical:
      return statistical_reflection(scenario.matrices);
    case Method::random: {
      Rng rng = Rng::stream(scenario.seed, kRandomReflectionStream);
      return random_reflection(scenario.stats.total_elements(), rng);
    }
    case Method::siso_optimal:
      if (scenario.stats.antennas != 1) throw ConfigError("methods: siso_optimal requires M = 1");
      return siso_optimal_phases(scenario.stats);
    case Method::grid_oracle:
      return grid_search_reflection(scenario.matrices, scenario.system.transmit_power, cfg.grid_levels);
  }
  throw ConfigError("methods: unhandled method");
}

std::vector<RateReport> run_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<RateReport> rows;
  for (const SweepPoint& point : cfg.effective_sweep()) {
    const Scenario sc = build_scenario(cfg, point);
    McSettings mc;
    mc.transmit_power = sc.system.transmit_power;
    mc.noise_variance = sc.system.noise_variance;
    mc.xi = sc.matrices.xi;
    mc.trials = sc.system.trials;
    mc.seed = stream_seed(sc.seed, kMonteCarloStream);
    mc.workers = cfg.workers;

    for (Method method : cfg.methods) {
      RateReport row;
      row.scenario_id = sc.id;
      row.irs_count = point.irs_count;
      row.elements_per_irs = point.elements_per_irs;
      row.antennas = sc.system.antennas;
      row.xi = sc.matrices.xi;
      row.method = method;
      row.trials = mc.trials;
      row.seed = sc.seed;

      McEstimate estimate;
      if (method == Method::random && cfg.random_per_trial) {
        estimate = monte_carlo_rate(sc.stats, RandomPerTrial{}, mc);
      } else {
        const ReflectionVector v = design_reflection(cfg, sc, method);
        row.rate_analytical = theorem1_rate(v, sc.matrices, sc.system.transmit_power);
        estimate = monte_carlo_rate(sc.stats, v, mc);
      }
      row.rate_mc = estimate.mean_rate;
      row.mc_std_error = estimate.std_error;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace irs
