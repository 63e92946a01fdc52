#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>

#include "gbx/dft.hpp"
#include "gbx/field.hpp"
#include "gbx/integrator.hpp"

namespace gbx {

// Sobolev norm of order m from coefficients:
//   ||f||_m = sqrt( sum_l (1 + mu_l^2)^m |c_l|^2 ).
// Any real m is allowed (negative orders use the same formula); m = 0 is the
// plain l2 coefficient norm.
double sobolev_norm(const SpectrumField& spectrum, double order);

// Pointwise samplers of an exact solution z(x,t) and dz/dt(x,t).
struct ExactSolution {
  std::function<double(double x, double t)> z;
  std::function<double(double x, double t)> dz;
};

// e_z = ||I_M(z_num - z_exact)||_m, e_dz likewise at order m-2, both at the
// state's time.
struct ErrorReport {
  double order = 0.0;  // m
  double e_z = 0.0;
  double e_dz = 0.0;
  double total = 0.0;  // e_z + e_dz
  double t = 0.0;
};

ErrorReport error_pair(const Dft& dft, const WaveState& state, const ExactSolution& exact,
                       double order);

// Mass M(t) = integral of z over the torus = (b-a) * Re(c_0); the
// trigonometric quadrature is exact for the interpolant.
double mass(const WaveState& state);

// Fraction of the l2 coefficient energy carried by the top-third band
// |l| > M/3 (the modes a 2/3-rule truncation would discard); 0 for an empty
// spectrum.  An aliasing indicator for strongly nonlinear runs.
double aliasing_fraction(const SpectrumField& spectrum);

struct BlowupPolicy {
  double threshold = 1e6;        // on max nodal |z|
  std::int64_t check_stride = 10;
};

struct BlowupRecord {
  double time = 0.0;
  double max_amplitude = 0.0;
};

// Triggers iff max nodal |z| >= threshold or any value is non-finite (or the
// state is already flagged diverged).
std::optional<BlowupRecord> detect_blowup(const WaveState& state, const BlowupPolicy& policy,
                                          const Dft& dft);
std::optional<BlowupRecord> detect_blowup(const WaveState& state, const BlowupPolicy& policy);

// Least-squares slope of log(error) against log(step), plus the largest
// absolute residual of the fit.  Requires >= 3 samples, all positive.
struct OrderFit {
  double slope = 0.0;
  double max_residual = 0.0;
};

OrderFit fit_order(std::span<const std::pair<double, double>> samples);

}  // namespace gbx
