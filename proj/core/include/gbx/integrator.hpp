#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gbx/dft.hpp"
#include "gbx/field.hpp"
#include "gbx/grid.hpp"
#include "gbx/nonlinearity.hpp"

namespace gbx {

// Deuflhard-type exponential integrator for
//
//   z_tt - z_xx + z_xxxx - (f(z))_xx = 0
//
// in Fourier coefficient space.  Per mode l the linear part is an exact
// rotation with frequency theta_l = sqrt(mu_l^2 + mu_l^4); the nonlinear
// convolution integral of the variation-of-constants formula is approximated
// by the trapezoid rule.  With rho^k = coefficients of f(z^k) the update is
//
//   l = 0:   z_0^{k+1}  = z_0^k + tau * dz_0^k,        dz_0^{k+1} = dz_0^k
//   l != 0:  z_l^{k+1}  =  cos(theta tau) z_l^k + sin(theta tau)/theta dz_l^k
//                          - tau mu^2 sin(theta tau)/(2 theta) rho_l^k
//            dz_l^{k+1} = -theta sin(theta tau) z_l^k + cos(theta tau) dz_l^k
//                          - tau mu^2/2 [cos(theta tau) rho_l^k + rho_l^{k+1}]
//
// The scheme is explicit, time-symmetric, second order in time, and needs
// exactly two nonlinearity evaluations (transform round trips) per step.

// Per-mode update weights, stored in transform (slot) order.  The l = 0 slot
// of the trigonometric arrays is unused; that mode takes the linear branch
// driven by the scalar tau.
struct StepperCoefficients {
  double tau = 0.0;
  std::vector<double> cos_tau;          // cos(theta tau)
  std::vector<double> sinc_tau;         // sin(theta tau)/theta
  std::vector<double> z_from_rho;       // tau mu^2 sin(theta tau)/(2 theta)
  std::vector<double> dz_from_z;        // theta sin(theta tau)
  std::vector<double> dz_from_rho_old;  // tau mu^2/2 cos(theta tau)
  std::vector<double> dz_from_rho_new;  // tau mu^2/2
};

// tau may be negative (reversibility checks) but not zero or non-finite.
StepperCoefficients build_tables(const TorusGrid& grid, double tau);

// Integrator state: spectra of z and of dz/dt at time t.
struct WaveState {
  explicit WaveState(const TorusGrid& grid) : zhat(grid), dzhat(grid) {}
  WaveState(SpectrumField z, SpectrumField dz, double time = 0.0)
      : t(time), zhat(std::move(z)), dzhat(std::move(dz)) {}

  double t = 0.0;
  SpectrumField zhat;
  SpectrumField dzhat;
  bool diverged = false;
  std::int64_t diverged_step = -1;

  const TorusGrid& grid() const { return zhat.grid(); }
};

// Samples initial data (z, dz/dt at t = 0) into coefficient space.
WaveState make_wave_state(const Dft& dft, const NodalField& z0, const NodalField& z1,
                          double t0 = 0.0);

// Coefficients of I_M f(z): inverse transform, node-wise f, forward transform.
SpectrumField nonlinear_spectrum(const Dft& dft, const SpectrumField& zhat,
                                 const Nonlinearity& f);

// Periodic callback during evolve; invoked at multiples of `stride` and at the
// final step.  Returning true halts the run with the state flagged diverged
// (used for blow-up detection).
struct Observer {
  std::int64_t stride = 1;
  std::function<bool(std::int64_t step, const WaveState&)> notify;
};

// One simulation context: grid, step size, nonlinearity, cached tables and
// transform plans.  Stepping is sequential within a context; distinct
// contexts may run concurrently.  With dealias set, the 2/3-rule truncation
// is applied to each nonlinear spectrum (off by default; the plain scheme
// needs none).
class Stepper {
 public:
  Stepper(const TorusGrid& grid, double tau, Nonlinearity f, bool dealias = false);

  const TorusGrid& grid() const { return grid_; }
  double tau() const { return tab_.tau; }
  const StepperCoefficients& tables() const { return tab_; }
  const Dft& dft() const { return dft_; }
  const Nonlinearity& nonlinearity() const { return f_; }

  // One step.  If the update produces non-finite values, returns the input
  // state flagged diverged instead of propagating them.
  WaveState step(const WaveState& state) const;

  // Applies `step` n_steps times, firing observers at their strides.  Halts
  // early with a diverged-flagged state on blow-up (observer request or
  // non-finite values).  Observer exceptions abort with step/time context.
  WaveState evolve(WaveState state, std::int64_t n_steps,
                   std::span<const Observer> observers = {}) const;

 private:
  TorusGrid grid_;
  Nonlinearity f_;
  StepperCoefficients tab_;
  Dft dft_;
  bool dealias_ = false;
};

}  // namespace gbx
