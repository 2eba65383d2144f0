#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "irs/analysis.hpp"
#include "irs/scenario.hpp"

namespace irs {

enum class Method { statistical, random, siso_optimal, grid_oracle };

std::string_view method_name(Method m);
Method parse_method(std::string_view name);  // throws ConfigError

struct SweepPoint {
  int irs_count = 0;
  int elements_per_irs = 0;

  bool operator==(const SweepPoint&) const = default;
};

enum class SweepMode {
  sweep,       // any positive (N, L) pairs
  comparison,  // N in {1, 4}, equal N L across all pairs
};

// Everything a config file can set.
//
// File format: one `key = value` per line, `#` starts a comment. Keys mirror
// SystemConfig (M, N, L, P, sigma2, T, rho, lambda, C0, D0, alpha_exp, corr_r,
// seed, trials); P, sigma2 and rho also accept a `_db` form. Harness keys:
// sweep (e.g. `1x64, 4x16`), methods, mode, workers, grid_levels,
// random_policy (fixed | per_trial), error_model (exact | published),
// perfect_csi, pure_los_bs_irs, pure_los_irs_user, user_x, user_y, d1_max,
// d2_max, d_min.
struct ExperimentConfig {
  SystemConfig system;
  std::vector<SweepPoint> sweep;  // empty: the single point (N, L) of `system`
  std::vector<Method> methods{Method::statistical, Method::random};
  SweepMode mode = SweepMode::sweep;
  int workers = 1;
  int grid_levels = 4;
  bool random_per_trial = false;
  ErrorPowerModel error_model = ErrorPowerModel::exact;

  std::vector<SweepPoint> effective_sweep() const;
  void validate() const;  // throws ConfigError naming the key
};

ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

double db_to_linear(double db);

// One row of experiment output.
struct RateReport {
  std::string scenario_id;
  int irs_count = 0;
  int elements_per_irs = 0;
  int antennas = 0;
  double xi = 0.0;
  Method method = Method::statistical;
  std::optional<double> rate_analytical;
  double rate_mc = 0.0;
  double mc_std_error = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
};

// Label of a sweep point, e.g. "N4_L16"; its seed is label_seed(cfg seed, id).
std::string scenario_id(const SweepPoint& point);

// Deterministic scenario built for one sweep point.
struct Scenario {
  std::string id;
  std::uint64_t seed = 0;
  SystemConfig system;
  DeploymentGeometry geometry;
  ChannelStatistics stats;
  StatMatrices matrices;
};

Scenario build_scenario(const ExperimentConfig& cfg, const SweepPoint& point);

// Reflection vector for `method` in `scenario`.
ReflectionVector design_reflection(const ExperimentConfig& cfg, const Scenario& scenario, Method method);

// For each sweep point and method: build the scenario, design v, evaluate the
// closed-form rate and the Monte Carlo rate. Rows come out point-major in the
// order of the sweep and the method list. Monte Carlo draws are shared by all
// methods of a scenario.
std::vector<RateReport> run_sweep(const ExperimentConfig& cfg);

inline constexpr std::string_view kCsvHeader =
    "scenario_id,N,L,M,xi,method,rate_analytical,rate_mc,mc_std_error,trials,seed";

std::string format_csv(const std::vector<RateReport>& reports);
std::vector<RateReport> parse_csv(std::string_view text);

// Throws std::runtime_error when the file cannot be written.
void emit_csv(const std::vector<RateReport>& reports, const std::filesystem::path& path);

}  // namespace irs
