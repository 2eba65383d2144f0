#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "irs/errors.hpp"
#include "irs/harness.hpp"

namespace irs {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

struct Entry {
  std::string value;
  int line = 0;
};

class Reader {
 public:
  explicit Reader(std::map<std::string, Entry> entries) : entries_(std::move(entries)) {}

  bool has(const std::string& key) const { return entries_.count(key) > 0; }

  double real(const std::string& key) {
    const Entry& e = take(key);
    double x = 0.0;
    const char* end = e.value.data() + e.value.size();
    auto [ptr, ec] = std::from_chars(e.value.data(), end, x);
    if (ec != std::errc() || ptr != end || !std::isfinite(x)) fail(key, e, "expected a finite number");
    return x;
  }

  long long integer(const std::string& key) {
    const Entry& e = take(key);
    long long x = 0;
    const char* end = e.value.data() + e.value.size();
    auto [ptr, ec] = std::from_chars(e.value.data(), end, x);
    if (ec != std::errc() || ptr != end) fail(key, e, "expected an integer");
    return x;
  }

  std::uint64_t unsigned_integer(const std::string& key) {
    const Entry& e = take(key);
    std::uint64_t x = 0;
    const char* end = e.value.data() + e.value.size();
    auto [ptr, ec] = std::from_chars(e.value.data(), end, x);
    if (ec != std::errc() || ptr != end) fail(key, e, "expected a nonnegative integer");
    return x;
  }

  bool boolean(const std::string& key) {
    const Entry& e = take(key);
    if (e.value == "true" || e.value == "1" || e.value == "yes") return true;
    if (e.value == "false" || e.value == "0" || e.value == "no") return false;
    fail(key, e, "expected true or false");
  }

  const Entry& text(const std::string& key) { return take(key); }

  // Linear value from `key` or `key_db`, never both.
  std::optional<double> linear_or_db(const std::string& key) {
    const std::string db_key = key + "_db";
    if (has(key) && has(db_key))
      throw ConfigError("config: both '" + key + "' and '" + db_key + "' given (line " +
                        std::to_string(entries_.at(db_key).line) + ")");
    if (has(key)) return real(key);
    if (has(db_key)) return db_to_linear(real(db_key));
    return std::nullopt;
  }

  void reject_unused() const {
    for (const auto& [key, e] : entries_)
      if (!used_.count(key)) throw ConfigError("config: unknown key '" + key + "' (line " + std::to_string(e.line) + ")");
  }

  [[noreturn]] static void fail(const std::string& key, const Entry& e, const std::string& why) {
    throw ConfigError("config: key '" + key + "' (line " + std::to_string(e.line) + "): " + why + ", got '" +
                      e.value + "'");
  }

 private:
  const Entry& take(const std::string& key) {
    used_.insert(key);
    return entries_.at(key);
  }

  std::map<std::string, Entry> entries_;
  std::set<std::string> used_;
};

int to_int(long long x, const char* key) {
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
    throw ConfigError(std::string("config: key '") + key + "' is out of range");
  return static_cast<int>(x);
}

}  // namespace

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

std::string_view method_name(Method m) {
  switch (m) {
    case Method::statistical: return "statistical";
    case Method::random: return "random";
    case Method::siso_optimal: return "siso_optimal";
    case Method::grid_oracle: return "grid_oracle";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::statistical, Method::random, Method::siso_optimal, Method::grid_oracle})
    if (method_name(m) == name) return m;
  throw ConfigError("methods: unknown method '" + std::string(name) + "'");
}

std::vector<SweepPoint> ExperimentConfig::effective_sweep() const {
  if (!sweep.empty()) return sweep;
  return {{system.irs_count, system.elements_per_irs}};
}

void ExperimentConfig::validate() const {
  system.validate();
  if (workers < 1) throw ConfigError("workers must be >= 1");
  if (grid_levels < 1) throw ConfigError("grid_levels must be >= 1");
  if (methods.empty()) throw ConfigError("methods must name at least one method");
  for (std::size_t i = 0; i < methods.size(); ++i)
    for (std::size_t j = i + 1; j < methods.size(); ++j)
      if (methods[i] == methods[j]) throw ConfigError("methods: '" + std::string(method_name(methods[i])) + "' listed twice");
  for (Method m : methods)
    if (m == Method::siso_optimal && system.antennas != 1)
      throw ConfigError("methods: siso_optimal requires M = 1");

  const auto points = effective_sweep();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const SweepPoint& p = points[i];
    if (p.irs_count < 1 || p.elements_per_irs < 1) throw ConfigError("sweep: N and L must be >= 1");
    for (std::size_t j = 0; j < i; ++j)
      if (points[j] == p) throw ConfigError("sweep: pair " + scenario_id(p) + " listed twice");
  }
  if (mode == SweepMode::comparison) {
    const long long total = static_cast<long long>(points.front().irs_count) * points.front().elements_per_irs;
    for (const SweepPoint& p : points) {
      if (p.irs_count != 1 && p.irs_count != 4)
        throw ConfigError("sweep: comparison mode needs N in {1, 4}, got " + scenario_id(p));
      if (static_cast<long long>(p.irs_count) * p.elements_per_irs != total)
        throw ConfigError("sweep: comparison mode needs equal N*L across pairs");
    }
  }
}

ExperimentConfig parse_config(std::string_view text) {
  std::map<std::string, Entry> entries;
  int line_no = 0;
  for (std::string_view raw : split(text, '\n')) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("config: line " + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ConfigError("config: line " + std::to_string(line_no) + ": empty key");
    if (entries.count(key))
      throw ConfigError("config: key '" + key + "' repeated (line " + std::to_string(line_no) + ")");
    entries.emplace(key, Entry{value, line_no});
  }

  Reader r(std::move(entries));
  ExperimentConfig cfg;
  SystemConfig& s = cfg.system;
  if (r.has("M")) s.antennas = to_int(r.integer("M"), "M");
  if (r.has("N")) s.irs_count = to_int(r.integer("N"), "N");
  if (r.has("L")) s.elements_per_irs = to_int(r.integer("L"), "L");
  if (auto p = r.linear_or_db("P")) s.transmit_power = *p;
  if (auto p = r.linear_or_db("sigma2")) s.noise_variance = *p;
  if (r.has("T")) s.training_length = to_int(r.integer("T"), "T");
  if (auto p = r.linear_or_db("rho")) s.training_snr = *p;
  if (r.has("lambda")) s.wavelength = r.real("lambda");
  if (r.has("C0")) s.reference_pathloss = r.real("C0");
  if (r.has("D0")) s.reference_distance = r.real("D0");
  if (r.has("alpha_exp")) s.pathloss_exponent = r.real("alpha_exp");
  if (r.has("corr_r")) s.correlation = r.real("corr_r");
  if (r.has("seed")) s.seed = r.unsigned_integer("seed");
  if (r.has("trials")) s.trials = to_int(r.integer("trials"), "trials");
  if (r.has("perfect_csi")) s.perfect_csi = r.boolean("perfect_csi");
  if (r.has("pure_los_bs_irs")) s.pure_los_bs_irs = r.boolean("pure_los_bs_irs");
  if (r.has("pure_los_irs_user")) s.pure_los_irs_user = r.boolean("pure_los_irs_user");
  if (r.has("user_x")) s.user_position.x = r.real("user_x");
  if (r.has("user_y")) s.user_position.y = r.real("user_y");
  if (r.has("d1_max")) s.max_bs_irs_distance = r.real("d1_max");
  if (r.has("d2_max")) s.max_irs_user_distance = r.real("d2_max");
  if (r.has("d_min")) s.min_link_distance = r.real("d_min");

  if (r.has("workers")) cfg.workers = to_int(r.integer("workers"), "workers");
  if (r.has("grid_levels")) cfg.grid_levels = to_int(r.integer("grid_levels"), "grid_levels");
  if (r.has("sweep")) {
    const Entry& e = r.text("sweep");
    for (std::string_view item : split(e.value, ',')) {
      const auto x = item.find('x');
      int n = 0, l = 0;
      bool ok = x != std::string_view::npos;
      if (ok) {
        const std::string_view ns = trim(item.substr(0, x)), ls = trim(item.substr(x + 1));
        ok = std::from_chars(ns.data(), ns.data() + ns.size(), n).ptr == ns.data() + ns.size() && !ns.empty() &&
             std::from_chars(ls.data(), ls.data() + ls.size(), l).ptr == ls.data() + ls.size() && !ls.empty();
      }
      if (!ok) Reader::fail("sweep", e, "expected a comma-separated list of NxL pairs");
      cfg.sweep.push_back({n, l});
    }
  }
  if (r.has("methods")) {
    cfg.methods.clear();
    for (std::string_view item : split(r.text("methods").value, ',')) cfg.methods.push_back(parse_method(item));
  }
  if (r.has("mode")) {
    const Entry& e = r.text("mode");
    if (e.value == "sweep") cfg.mode = SweepMode::sweep;
    else if (e.value == "comparison") cfg.mode = SweepMode::comparison;
    else Reader::fail("mode", e, "expected sweep or comparison");
  }
  if (r.has("random_policy")) {
    const Entry& e = r.text("random_policy");
    if (e.value == "fixed") cfg.random_per_trial = false;
    else if (e.value == "per_trial") cfg.random_per_trial = true;
    else Reader::fail("random_policy", e, "expected fixed or per_trial");
  }
  if (r.has("error_model")) {
    const Entry& e = r.text("error_model");
    if (e.value == "exact") cfg.error_model = ErrorPowerModel::exact;
    else if (e.value == "published") cfg.error_model = ErrorPowerModel::published;
    else Reader::fail("error_model", e, "expected exact or published");
  }
  r.reject_unused();
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config: cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace irs
