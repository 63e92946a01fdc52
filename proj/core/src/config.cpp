#include "gbx/config.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gbx/solutions.hpp"

#include "g17.hpp"

namespace gbx {

namespace {

const char* kValidKeys =
    "a, b, M, h, tau, T, preset, family, A, A1, A2, x0, x1, x2, v_sign, v1_sign, "
    "v2_sign, static, nonlinearity, m_orders, snapshot_stride, series_stride, "
    "blowup_threshold, out_dir, strict_steps";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value,
                            const std::string& why) {
  throw std::invalid_argument("config key '" + std::string(key) + "': bad value '" +
                              std::string(value) + "' (" + why + ")");
}

double parse_plain_real(std::string_view key, std::string_view text) {
  const std::string s{trim(text)};
  if (s.empty()) bad_value(key, text, "empty");
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) bad_value(key, text, "not a number");
  return v;
}

// Plain decimals plus simple rationals: "3/8" means 0.375.
double parse_real(std::string_view key, std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_plain_real(key, text);
  const double p = parse_plain_real(key, text.substr(0, slash));
  const double q = parse_plain_real(key, text.substr(slash + 1));
  if (q == 0.0) bad_value(key, text, "division by zero");
  return p / q;
}

std::int64_t parse_integer(std::string_view key, std::string_view text) {
  const std::string s{trim(text)};
  if (s.empty()) bad_value(key, text, "empty");
  char* end = nullptr;
  const long long v = std::strtoll(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size()) bad_value(key, text, "not an integer");
  return v;
}

bool parse_bool(std::string_view key, std::string_view text) {
  const std::string_view s = trim(text);
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  bad_value(key, text, "not a boolean");
}

int parse_sign(std::string_view key, std::string_view text, bool allow_zero) {
  const auto v = parse_integer(key, text);
  if (v == 1 || v == -1 || (allow_zero && v == 0)) return static_cast<int>(v);
  bad_value(key, text, allow_zero ? "expected -1, 0 or +1" : "expected -1 or +1");
}

std::vector<double> parse_order_list(std::string_view key, std::string_view text) {
  std::vector<double> orders;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) orders.push_back(parse_real(key, item));
  if (orders.empty()) bad_value(key, text, "empty list");
  return orders;
}

[[noreturn]] void invalid_field(const std::string& key, const std::string& why) {
  throw std::invalid_argument("invalid config: " + key + ": " + why);
}

}  // namespace

void apply_override(ExperimentConfig& cfg, std::string_view key, std::string_view value) {
  if (key == "a") cfg.a = parse_real(key, value);
  else if (key == "b") cfg.b = parse_real(key, value);
  else if (key == "M") cfg.modes = static_cast<int>(parse_integer(key, value));
  else if (key == "tau") cfg.tau = parse_real(key, value);
  else if (key == "T") cfg.horizon = parse_real(key, value);
  else if (key == "family") cfg.family = std::string(trim(value));
  else if (key == "A") cfg.amplitude = parse_real(key, value);
  else if (key == "A1") cfg.a1 = parse_real(key, value);
  else if (key == "A2") cfg.a2 = parse_real(key, value);
  else if (key == "x0") cfg.x0 = parse_real(key, value);
  else if (key == "x1") cfg.x1 = parse_real(key, value);
  else if (key == "x2") cfg.x2 = parse_real(key, value);
  else if (key == "v_sign") cfg.v_sign = parse_sign(key, value, false);
  else if (key == "v1_sign") cfg.v1_sign = parse_sign(key, value, true);
  else if (key == "v2_sign") cfg.v2_sign = parse_sign(key, value, true);
  else if (key == "static") cfg.static_pulse = parse_bool(key, value);
  else if (key == "nonlinearity") cfg.nonlinearity = std::string(trim(value));
  else if (key == "m_orders") cfg.m_orders = parse_order_list(key, value);
  else if (key == "snapshot_stride") cfg.snapshot_stride = parse_integer(key, value);
  else if (key == "series_stride") cfg.series_stride = parse_integer(key, value);
  else if (key == "blowup_threshold") cfg.blowup_threshold = parse_real(key, value);
  else if (key == "out_dir") cfg.out_dir = std::string(trim(value));
  else if (key == "strict_steps") cfg.strict_steps = parse_bool(key, value);
  else
    throw std::invalid_argument("unknown config key '" + std::string(key) + "'; valid keys: " +
                                kValidKeys);
}

ExperimentConfig parse_config(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> entries;
  std::set<std::string> seen;
  std::string preset_id, mesh_value;

  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string_view body = trim(line);
    if (body.empty()) continue;

    const auto eq = body.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected 'key = value', got '" + std::string(body) + "'");
    const std::string key{trim(body.substr(0, eq))};
    const std::string value{trim(body.substr(eq + 1))};
    if (key.empty() || value.empty())
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": empty key or value");
    if (!seen.insert(key).second)
      throw std::invalid_argument("duplicate config key '" + key + "'");

    if (key == "preset") preset_id = value;
    else if (key == "h") mesh_value = value;
    else entries.emplace_back(key, value);
  }

  if (seen.count("M") && seen.count("h"))
    throw std::invalid_argument("config keys 'M' and 'h' are mutually exclusive");

  ExperimentConfig cfg;
  if (!preset_id.empty()) cfg = preset_case(preset_id);
  for (const auto& [key, value] : entries) apply_override(cfg, key, value);

  // Mesh size arrives after a and b so the mode count can be derived.
  if (!mesh_value.empty()) {
    const double h = parse_real("h", mesh_value);
    if (!(h > 0.0)) bad_value("h", mesh_value, "must be positive");
    const double count = (cfg.b - cfg.a) / h;
    const auto modes = std::llround(count);
    if (std::abs(count - static_cast<double>(modes)) > 1e-9 * std::max(1.0, count))
      bad_value("h", mesh_value, "(b - a)/h must be an integer");
    cfg.modes = static_cast<int>(modes);
  }

  cfg.validate();
  return cfg;
}

std::int64_t ExperimentConfig::step_count() const {
  const auto n = std::llround(horizon / tau);
  if (strict_steps) {
    if (std::abs(static_cast<double>(n) * tau - horizon) > 1e-9 * std::max(1.0, horizon))
      invalid_field("T",
                    "not an integer multiple of tau in strict mode; adjust tau "
                    "(e.g. tau = T/" + std::to_string(n) + ") or set strict_steps = false");
    return n;
  }
  return horizon > 0.0 ? std::max<std::int64_t>(n, 1) : 0;
}

void ExperimentConfig::validate() const {
  if (!(b > a)) invalid_field("a/b", "requires b > a");
  if (modes < 4 || modes % 2 != 0)
    invalid_field("M", "mode count must be even and >= 4, got " + std::to_string(modes));
  if (!(tau > 0.0) || !std::isfinite(tau)) invalid_field("tau", "must be positive");
  if (!(horizon >= 0.0) || !std::isfinite(horizon)) invalid_field("T", "must be >= 0");

  if (family == "single") {
    if (!(amplitude > 0.0)) invalid_field("A", "must be positive");
    if (!static_pulse && amplitude > 1.5)
      invalid_field("A", "traveling soliton requires A <= 3/2; set static = true");
  } else if (family == "pair") {
    if (a1 < 0.0 || a2 < 0.0) invalid_field("A1/A2", "must be nonnegative");
    if (a1 == 0.0 && a2 == 0.0) invalid_field("A1/A2", "at least one must be positive");
    if (v1_sign != 0 && a1 > 1.5) invalid_field("A1", "traveling soliton requires A <= 3/2");
    if (v2_sign != 0 && a2 > 1.5) invalid_field("A2", "traveling soliton requires A <= 3/2");
  } else {
    invalid_field("family", "expected 'single' or 'pair', got '" + family + "'");
  }

  if (nonlinearity != "quadratic" && nonlinearity != "cubic" && nonlinearity != "identity" &&
      nonlinearity != "zero")
    invalid_field("nonlinearity", "unknown name '" + nonlinearity + "'");
  if (m_orders.empty()) invalid_field("m_orders", "must list at least one order");
  if (snapshot_stride < 0) invalid_field("snapshot_stride", "must be >= 0");
  if (series_stride < 1) invalid_field("series_stride", "must be >= 1");
  if (!(blowup_threshold > 0.0)) invalid_field("blowup_threshold", "must be positive");
  if (out_dir.empty()) invalid_field("out_dir", "must not be empty");

  step_count();  // strict-mode divisibility check
}

std::string serialize_config(const ExperimentConfig& cfg) {
  std::ostringstream out;
  if (!cfg.preset.empty()) out << "preset = " << cfg.preset << '\n';
  out << "a = " << detail::g17(cfg.a) << '\n';
  out << "b = " << detail::g17(cfg.b) << '\n';
  out << "M = " << cfg.modes << '\n';
  out << "tau = " << detail::g17(cfg.tau) << '\n';
  out << "T = " << detail::g17(cfg.horizon) << '\n';
  out << "family = " << cfg.family << '\n';
  if (cfg.family == "single") {
    out << "A = " << detail::g17(cfg.amplitude) << '\n';
    out << "x0 = " << detail::g17(cfg.x0) << '\n';
    out << "v_sign = " << cfg.v_sign << '\n';
    out << "static = " << (cfg.static_pulse ? "true" : "false") << '\n';
  } else {
    out << "A1 = " << detail::g17(cfg.a1) << '\n';
    out << "A2 = " << detail::g17(cfg.a2) << '\n';
    out << "x1 = " << detail::g17(cfg.x1) << '\n';
    out << "x2 = " << detail::g17(cfg.x2) << '\n';
    out << "v1_sign = " << cfg.v1_sign << '\n';
    out << "v2_sign = " << cfg.v2_sign << '\n';
  }
  out << "nonlinearity = " << cfg.nonlinearity << '\n';
  out << "m_orders = ";
  for (std::size_t i = 0; i < cfg.m_orders.size(); ++i)
    out << (i ? "," : "") << detail::g17(cfg.m_orders[i]);
  out << '\n';
  out << "snapshot_stride = " << cfg.snapshot_stride << '\n';
  out << "series_stride = " << cfg.series_stride << '\n';
  out << "blowup_threshold = " << detail::g17(cfg.blowup_threshold) << '\n';
  out << "out_dir = " << cfg.out_dir << '\n';
  out << "strict_steps = " << (cfg.strict_steps ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace gbx
