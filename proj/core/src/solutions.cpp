#include "gbx/solutions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gbx {

namespace {

double sech(double u) { return 1.0 / std::cosh(u); }

void check_amplitude_positive(double amplitude) {
  if (!(amplitude > 0.0) || !std::isfinite(amplitude))
    throw std::invalid_argument("soliton amplitude must be positive, got " +
                                std::to_string(amplitude));
}

// Shared layout of the interaction presets: domain [-400, 400], h = 1/8.
ExperimentConfig interaction_base() {
  ExperimentConfig cfg;
  cfg.a = -400.0;
  cfg.b = 400.0;
  cfg.modes = 6400;
  cfg.tau = 1e-3;
  cfg.horizon = 100.0;
  cfg.family = "pair";
  return cfg;
}

ExperimentConfig pair_preset(double a1, double a2, double x1, double x2, int v1, int v2) {
  ExperimentConfig cfg = interaction_base();
  cfg.a1 = a1;
  cfg.a2 = a2;
  cfg.x1 = x1;
  cfg.x2 = x2;
  cfg.v1_sign = v1;
  cfg.v2_sign = v2;
  return cfg;
}

}  // namespace

double soliton_velocity(double amplitude, int sign) {
  check_amplitude_positive(amplitude);
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("soliton_velocity: sign must be +1 or -1");
  const double radicand = 1.0 - 2.0 * amplitude / 3.0;
  if (radicand < 0.0)
    throw std::domain_error("soliton_velocity: amplitude " + std::to_string(amplitude) +
                            " > 3/2 gives an imaginary velocity");
  return sign * std::sqrt(radicand);
}

double soliton(double x, double t, const SolitonParams& p) {
  check_amplitude_positive(p.amplitude);
  const double s = sech(std::sqrt(p.amplitude / 6.0) * (x - p.velocity * t - p.center));
  return -p.amplitude * s * s;
}

double soliton_time_derivative(double x, double t, const SolitonParams& p) {
  check_amplitude_positive(p.amplitude);
  const double xi = std::sqrt(p.amplitude / 6.0) * (x - p.velocity * t - p.center);
  const double s = sech(xi);
  return -p.amplitude * p.velocity * std::sqrt(2.0 * p.amplitude / 3.0) * s * s * std::tanh(xi);
}

InitialData initial_single(const TorusGrid& grid, double amplitude, double center, int v_sign) {
  check_amplitude_positive(amplitude);
  SolitonParams p{amplitude, center, v_sign == 0 ? 0.0 : soliton_velocity(amplitude, v_sign)};

  InitialData init{NodalField(grid), NodalField(grid),
                   v_sign == 0 ? "single-static" : "single-traveling"};
  for (int j = 0; j < grid.modes(); ++j) {
    const double x = grid.node(j);
    init.z0[j] = soliton(x, 0.0, p);
    init.z1[j] = v_sign == 0 ? 0.0 : soliton_time_derivative(x, 0.0, p);
  }
  return init;
}

InitialData initial_pair(const TorusGrid& grid, double a1, double a2, double x1, double x2,
                         int v1_sign, int v2_sign) {
  InitialData init{NodalField(grid), NodalField(grid), "pair"};
  const auto add = [&](double amplitude, double center, int v_sign) {
    if (amplitude == 0.0) return;
    InitialData one = initial_single(grid, amplitude, center, v_sign);
    for (int j = 0; j < grid.modes(); ++j) {
      init.z0[j] += one.z0[j];
      init.z1[j] += one.z1[j];
    }
  };
  add(a1, x1, v1_sign);
  add(a2, x2, v2_sign);
  return init;
}

ExperimentConfig preset_case(std::string_view id) {
  ExperimentConfig cfg;

  if (id == "example1") {
    // Traveling soliton on (-60, 60), the accuracy/mass test setup.
    cfg.a = -60.0;
    cfg.b = 60.0;
    cfg.modes = 960;
    cfg.tau = 1e-3;
    cfg.horizon = 2.0;
    cfg.family = "single";
    cfg.amplitude = 0.375;
    cfg.x0 = 0.0;
    cfg.v_sign = 1;
  } else if (id.rfind("birth-A=", 0) == 0) {
    // Single-soliton splitting sweep; at A = 3/2 the velocity vanishes and
    // the initial data reduces to the static pulse.
    double amplitude = 0.0;
    try {
      amplitude = std::stod(std::string(id.substr(8)));
    } catch (const std::exception&) {
      throw std::invalid_argument("preset '" + std::string(id) + "': bad amplitude value");
    }
    cfg.a = -400.0;
    cfg.b = 400.0;
    cfg.modes = 6400;
    cfg.tau = 1e-3;
    cfg.horizon = 30.0;
    cfg.family = "single";
    cfg.amplitude = amplitude;
    cfg.x0 = 0.0;
    cfg.v_sign = 1;
  }
  // Two-soliton catalog.  Head-on pairs place the right-moving soliton on
  // the left so the collision happens mid-domain; a velocity sign of 0 marks
  // a static pulse.
  else if (id == "case-i") {
    cfg = pair_preset(0.2, 0.3, -50.0, 50.0, 1, -1);
  } else if (id == "case-ii") {
    cfg = pair_preset(0.2, 0.5, -10.0, 10.0, 1, -1);
  } else if (id == "case-iii") {
    cfg = pair_preset(0.37, 0.37, -50.0, 50.0, 1, -1);
  } else if (id == "case-iv") {
    cfg = pair_preset(0.38, 0.38, -50.0, 50.0, 1, -1);
  } else if (id == "case-v") {
    cfg = pair_preset(0.3, 0.45, -50.0, 50.0, 1, -1);
  } else if (id == "case-vi") {
    cfg = pair_preset(0.3, 0.46, -50.0, 50.0, 1, -1);
  } else if (id == "case-vii") {
    cfg = pair_preset(0.37, 1.5, -50.0, 50.0, 1, 0);
  } else if (id == "case-viii") {
    cfg = pair_preset(0.38, 1.5, -50.0, 50.0, 1, 0);
  } else if (id == "case-ix") {
    cfg = pair_preset(1.5, 1.5, -30.0, 30.0, 0, 0);
  } else if (id == "case-x") {
    cfg = pair_preset(1.5, 1.5, -20.0, 20.0, 0, 0);
  } else if (id == "case-xi") {
    cfg = pair_preset(0.2, 1.0, -80.0, -50.0, 1, 1);
  } else {
    std::string valid;
    for (const auto& p : preset_ids()) valid += " " + p;
    throw std::invalid_argument("unknown preset '" + std::string(id) + "'; valid ids:" + valid);
  }

  cfg.preset = std::string(id);
  return cfg;
}

std::vector<std::string> preset_ids() {
  return {"example1", "case-i",   "case-ii", "case-iii", "case-iv",
          "case-v",   "case-vi",  "case-vii", "case-viii", "case-ix",
          "case-x",   "case-xi",  "birth-A=<value>"};
}

}  // namespace gbx
