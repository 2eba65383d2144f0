#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "irs/errors.hpp"
#include "irs/harness.hpp"

using namespace irs;

namespace {

std::string config_error(std::string_view text) {
  try {
    parse_config(text).validate();
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

ExperimentConfig small_config() {
  return parse_config(
      "M = 2\n"
      "sweep = 1x8, 4x2\n"
      "trials = 50\n"
      "seed = 3\n");
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("parse keys and dB forms") {
  const auto cfg = parse_config(
      "# comment\n"
      "M = 4   # trailing\n"
      "N = 2\n"
      "L = 8\n"
      "P_db = 20\n"
      "sigma2 = 0.5\n"
      "rho_db = 10\n"
      "T = 5\n"
      "corr_r = 0.3\n"
      "methods = statistical, random\n"
      "random_policy = per_trial\n"
      "error_model = published\n"
      "workers = 3\n");
  CHECK(cfg.system.antennas == 4);
  CHECK(cfg.system.irs_count == 2);
  CHECK(cfg.system.elements_per_irs == 8);
  CHECK(cfg.system.transmit_power == doctest::Approx(100.0));
  CHECK(cfg.system.noise_variance == 0.5);
  CHECK(cfg.system.training_snr == doctest::Approx(10.0));
  CHECK(cfg.system.training_length == 5);
  CHECK(cfg.system.correlation == 0.3);
  CHECK(cfg.methods.size() == 2);
  CHECK(cfg.random_per_trial);
  CHECK(cfg.error_model == ErrorPowerModel::published);
  CHECK(cfg.workers == 3);
  CHECK(db_to_linear(30.0) == doctest::Approx(1000.0));
}

TEST_CASE("config errors name the key") {
  CHECK(config_error("bogus = 1\n").find("bogus") != std::string::npos);
  CHECK(config_error("M = 2\nM = 3\n").find("'M'") != std::string::npos);
  CHECK(config_error("P = 100\nP_db = 20\n").find("P") != std::string::npos);
  CHECK(config_error("M = two\n").find("'M'") != std::string::npos);
  CHECK(config_error("corr_r = 1.5\n").find("corr_r") != std::string::npos);
  CHECK(config_error("sigma2 = 0\n").find("sigma2") != std::string::npos);
  CHECK(config_error("sweep = 4by16\n").find("sweep") != std::string::npos);
  CHECK(config_error("mode = comparison\nsweep = 2x32, 4x16\n").find("sweep") != std::string::npos);
  CHECK(config_error("mode = comparison\nsweep = 1x32, 4x16\n").find("sweep") != std::string::npos);
  CHECK(config_error("methods = statistical, magic\n").find("methods") != std::string::npos);
  CHECK(config_error("just some words\n").find("line 1") != std::string::npos);
  CHECK(config_error("mode = comparison\nsweep = 1x64, 4x16\n").empty());
}

TEST_CASE("scenario ids and seeds") {
  CHECK(scenario_id({4, 16}) == "N4_L16");
  const auto cfg = small_config();
  const auto a = build_scenario(cfg, {4, 2});
  const auto b = build_scenario(cfg, {4, 2});
  CHECK(a.id == "N4_L2");
  CHECK(a.seed == label_seed(3, "N4_L2"));
  CHECK(a.seed == b.seed);
  CHECK(a.stats.mean_bs_irs == b.stats.mean_bs_irs);
  CHECK(a.seed != build_scenario(cfg, {1, 8}).seed);
}

TEST_CASE("sweep cardinality and determinism") {
  auto cfg = small_config();
  const auto rows = run_sweep(cfg);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].scenario_id == "N1_L8");
  CHECK(rows[0].method == Method::statistical);
  CHECK(rows[1].method == Method::random);
  CHECK(rows[2].scenario_id == "N4_L2");
  for (const auto& r : rows) {
    CHECK(r.trials == 50);
    CHECK(r.rate_mc >= 0.0);
    REQUIRE(r.rate_analytical.has_value());
    CHECK(*r.rate_analytical >= 0.0);
  }
  const std::string first = format_csv(rows);
  cfg.workers = 5;
  CHECK(format_csv(run_sweep(cfg)) == first);
}

TEST_CASE("csv format and round trip") {
  CHECK(format_csv({}) == std::string(kCsvHeader) + "\n");
  RateReport r;
  r.scenario_id = "N4_L16";
  r.irs_count = 4;
  r.elements_per_irs = 16;
  r.antennas = 9;
  r.xi = 1.0 / 1001.0;
  r.method = Method::random;
  r.rate_analytical = 9.7679512612345;
  r.rate_mc = 9.70123456789;
  r.mc_std_error = 0.0123456789;
  r.trials = 1000;
  r.seed = 18446744073709551615ull;
  const std::string text = format_csv({r});
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
  const auto back = parse_csv(text);
  REQUIRE(back.size() == 1);
  CHECK(back[0].scenario_id == r.scenario_id);
  CHECK(back[0].method == r.method);
  CHECK(back[0].seed == r.seed);
  CHECK(back[0].trials == 1000);
  CHECK(std::abs(*back[0].rate_analytical / *r.rate_analytical - 1.0) < 5e-9);
  CHECK(std::abs(back[0].rate_mc / r.rate_mc - 1.0) < 5e-9);
  CHECK(std::abs(back[0].xi / r.xi - 1.0) < 5e-9);

  r.rate_analytical.reset();
  CHECK_FALSE(parse_csv(format_csv({r}))[0].rate_analytical.has_value());

  CHECK_THROWS_AS(parse_csv("wrong,header\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_csv(std::string(kCsvHeader) + "\nN1_L1,1,1\n"), std::runtime_error);
}

TEST_CASE("emit_csv writes the file") {
  const auto dir = std::filesystem::temp_directory_path() / "irs_harness_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.csv";
  emit_csv({}, path);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == std::string(kCsvHeader) + "\n");
  CHECK_THROWS_AS(emit_csv({}, dir / "missing" / "x.csv"), std::runtime_error);
  std::filesystem::remove_all(dir);
}

}  // TEST_SUITE
