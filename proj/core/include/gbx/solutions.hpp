#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gbx/config.hpp"
#include "gbx/field.hpp"
#include "gbx/grid.hpp"

namespace gbx {

// Traveling-wave soliton z(x,t) = -A sech^2(sqrt(A/6) (x - v t - x0)) with
// v = +-sqrt(1 - 2A/3); amplitude A <= 3/2 keeps the radicand nonnegative.
struct SolitonParams {
  double amplitude = 0.0;  // A
  double center = 0.0;     // x0
  double velocity = 0.0;   // v
};

// sign * sqrt(1 - 2A/3).  Throws std::invalid_argument for A <= 0 and
// std::domain_error for A > 3/2 (imaginary velocity).
double soliton_velocity(double amplitude, int sign);

double soliton(double x, double t, const SolitonParams& p);

// dz/dt of the closed form; equals -v * dz/dx (traveling-wave identity).
double soliton_time_derivative(double x, double t, const SolitonParams& p);

// Nodal samples of z(.,0) and dz/dt(.,0) for one initial-data family.
struct InitialData {
  NodalField z0;
  NodalField z1;
  std::string provenance;
};

// Single-soliton initial data.  v_sign = +1/-1 selects the traveling family
// (z1 = dz/dt of the exact soliton); v_sign = 0 selects the static-pulse
// family with z1 = 0.
InitialData initial_single(const TorusGrid& grid, double amplitude, double center, int v_sign);

// Superposition of two single-soliton data sets.  An amplitude of zero
// contributes nothing (reduces to initial_single of the other).
InitialData initial_pair(const TorusGrid& grid, double a1, double a2, double x1, double x2,
                         int v1_sign, int v2_sign);

// Preset catalog: "example1", "case-i".."case-xi", "birth-A=<value>".
// Throws std::invalid_argument listing the valid ids for an unknown id.
ExperimentConfig preset_case(std::string_view id);

std::vector<std::string> preset_ids();

}  // namespace gbx
