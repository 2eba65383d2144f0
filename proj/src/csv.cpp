#include <charconv>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "irs/errors.hpp"
#include "irs/harness.hpp"

namespace irs {

namespace {

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(',', start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

template <typename T>
T parse_field(std::string_view s, int line) {
  T x{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::runtime_error("csv line " + std::to_string(line) + ": bad field '" + std::string(s) + "'");
  return x;
}

}  // namespace

std::string format_csv(const std::vector<RateReport>& reports) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const RateReport& r : reports) {
    out += r.scenario_id;
    out += ',' + std::to_string(r.irs_count);
    out += ',' + std::to_string(r.elements_per_irs);
    out += ',' + std::to_string(r.antennas);
    out += ',' + format_real(r.xi);
    out += ',';
    out += method_name(r.method);
    out += ',' + (r.rate_analytical ? format_real(*r.rate_analytical) : std::string());
    out += ',' + format_real(r.rate_mc);
    out += ',' + format_real(r.mc_std_error);
    out += ',' + std::to_string(r.trials);
    out += ',' + std::to_string(r.seed);
    out += '\n';
  }
  return out;
}

std::vector<RateReport> parse_csv(std::string_view text) {
  std::vector<RateReport> rows;
  int line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line_no == 1) {
      if (line != kCsvHeader) throw std::runtime_error("csv line 1: unexpected header");
      continue;
    }
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 11) throw std::runtime_error("csv line " + std::to_string(line_no) + ": expected 11 fields");
    RateReport r;
    r.scenario_id = std::string(f[0]);
    r.irs_count = parse_field<int>(f[1], line_no);
    r.elements_per_irs = parse_field<int>(f[2], line_no);
    r.antennas = parse_field<int>(f[3], line_no);
    r.xi = parse_field<double>(f[4], line_no);
    r.method = parse_method(f[5]);
    if (!f[6].empty()) r.rate_analytical = parse_field<double>(f[6], line_no);
    r.rate_mc = parse_field<double>(f[7], line_no);
    r.mc_std_error = parse_field<double>(f[8], line_no);
    r.trials = parse_field<int>(f[9], line_no);
    r.seed = parse_field<std::uint64_t>(f[10], line_no);
    rows.push_back(std::move(r));
  }
  if (line_no == 0) throw std::runtime_error("csv: missing header");
  return rows;
}

void emit_csv(const std::vector<RateReport>& reports, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("emit_csv: cannot open '" + path.string() + "' for writing");
  const std::string text = format_csv(reports);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw std::runtime_error("emit_csv: write to '" + path.string() + "' failed");
}

}  // namespace irs
