#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gbx {

// Declarative description of one run or sweep, parsed from line-based
// "key = value" text.  See parse_config for the accepted keys.
struct ExperimentConfig {
  double a = 0.0;
  double b = 0.0;
  int modes = 0;  // M; may be derived from mesh size h = (b-a)/M

  double tau = 0.0;
  double horizon = 0.0;  // final time T

  std::string preset;  // preset id this config was expanded from, if any

  // Initial data family: "single" (one soliton) or "pair" (superposition).
  std::string family;
  double amplitude = 0.0;  // A   (single)
  double x0 = 0.0;
  double a1 = 0.0, a2 = 0.0;  // pair amplitudes
  double x1 = 0.0, x2 = 0.0;  // pair positions
  int v_sign = 1;             // single: velocity sign (+1/-1)
  int v1_sign = 1, v2_sign = -1;
  bool static_pulse = false;  // single: zero initial velocity family

  std::string nonlinearity = "quadratic";
  std::vector<double> m_orders = {1.0, 2.0, 3.0};

  std::int64_t snapshot_stride = 0;  // 0: first and last snapshot only
  std::int64_t series_stride = 100;
  double blowup_threshold = 1e6;
  std::string out_dir = ".";
  bool strict_steps = true;

  double mesh() const { return (b - a) / modes; }
  std::int64_t step_count() const;  // T/tau, validated per strict_steps

  // Field-level validation; throws std::invalid_argument with the offending
  // key in the message.
  void validate() const;

  bool operator==(const ExperimentConfig&) const = default;
};

// Parses the line-based config format: one "key = value" per line, '#'
// comments, blank lines ignored.  Unknown or duplicate keys are rejected.
// Numeric values accept plain decimals and simple rationals ("3/8").
// A "preset = <id>" line expands the preset first; the remaining keys
// override its fields.
ExperimentConfig parse_config(std::string_view text);

// Inverse of parse_config up to field equality (round-trip stable).
std::string serialize_config(const ExperimentConfig& config);

// Applies "key = value" override pairs on top of an existing config
// (duplicates allowed here, later wins).
void apply_override(ExperimentConfig& config, std::string_view key, std::string_view value);

}  // namespace gbx
