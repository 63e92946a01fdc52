#include "gbx/integrator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "gbx/errors.hpp"

namespace gbx {

namespace {

// Looser than the public kRealnessTol: benign roundoff accumulates over long
// runs; anything past this indicates a genuine symmetry bug.
constexpr double kEvolveRealnessGuard = 1e-9;

}  // namespace

Nonlinearity Nonlinearity::by_name(std::string_view name) {
  if (name == "quadratic") return quadratic();
  if (name == "cubic") return cubic();
  if (name == "identity") return identity();
  if (name == "zero") return zero();
  throw std::invalid_argument("unknown nonlinearity '" + std::string(name) +
                              "' (expected quadratic, cubic, identity or zero)");
}

StepperCoefficients build_tables(const TorusGrid& grid, double tau) {
  if (tau == 0.0 || !std::isfinite(tau))
    throw std::invalid_argument("build_tables: tau must be finite and nonzero");

  const int n = grid.modes();
  StepperCoefficients tab;
  tab.tau = tau;
  tab.cos_tau.assign(n, 0.0);
  tab.sinc_tau.assign(n, 0.0);
  tab.z_from_rho.assign(n, 0.0);
  tab.dz_from_z.assign(n, 0.0);
  tab.dz_from_rho_old.assign(n, 0.0);
  tab.dz_from_rho_new.assign(n, 0.0);

  for (int k = 1; k < n; ++k) {  // slot 0 is the l = 0 linear branch
    const int l = slot_to_mode(k, n);
    const double mu = grid.mu(l);
    const double theta = grid.theta(l);
    const double c = std::cos(theta * tau);
    const double s = std::sin(theta * tau);
    tab.cos_tau[k] = c;
    tab.sinc_tau[k] = s / theta;
    tab.z_from_rho[k] = tau * mu * mu * s / (2.0 * theta);
    tab.dz_from_z[k] = theta * s;
    tab.dz_from_rho_old[k] = 0.5 * tau * mu * mu * c;
    tab.dz_from_rho_new[k] = 0.5 * tau * mu * mu;
  }
  return tab;
}

WaveState make_wave_state(const Dft& dft, const NodalField& z0, const NodalField& z1,
                          double t0) {
  WaveState state(dft.forward(z0), dft.forward(z1), t0);
  return state;
}

SpectrumField nonlinear_spectrum(const Dft& dft, const SpectrumField& zhat,
                                 const Nonlinearity& f) {
  NodalField z = dft.inverse(zhat);
  for (double& v : z.values()) v = f(v);
  return dft.forward(z);
}

Stepper::Stepper(const TorusGrid& grid, double tau, Nonlinearity f, bool dealias)
    : grid_(grid), f_(std::move(f)), tab_(build_tables(grid, tau)), dft_(grid),
      dealias_(dealias) {}

WaveState Stepper::step(const WaveState& state) const {
  if (state.diverged) throw divergence_error("Stepper::step: state is flagged diverged");
  if (state.grid() != grid_)
    throw std::invalid_argument("Stepper::step: state built on a different grid");

  const int n = grid_.modes();
  const double tau = tab_.tau;

  const auto nonlinear = [&](const SpectrumField& spec, SpectrumField& rho) -> bool {
    NodalField z = dft_.inverse(spec, kEvolveRealnessGuard);
    for (double& v : z.values()) v = f_(v);
    if (!z.all_finite()) return false;
    rho = dft_.forward(z);
    if (dealias_) dealias_two_thirds(rho);
    return true;
  };

  const auto diverged_copy = [&]() {
    WaveState out = state;
    out.diverged = true;
    return out;
  };

  SpectrumField rho_old(grid_);
  if (!nonlinear(state.zhat, rho_old)) return diverged_copy();

  WaveState next(grid_);
  next.t = state.t + tau;

  auto z = state.zhat.slots();
  auto dz = state.dzhat.slots();
  auto zn = next.zhat.slots();
  auto ro = rho_old.slots();

  zn[0] = z[0] + tau * dz[0];
  for (int k = 1; k < n; ++k)
    zn[k] = tab_.cos_tau[k] * z[k] + tab_.sinc_tau[k] * dz[k] - tab_.z_from_rho[k] * ro[k];
  if (!next.zhat.all_finite()) return diverged_copy();

  SpectrumField rho_new(grid_);
  if (!nonlinear(next.zhat, rho_new)) return diverged_copy();

  auto dzn = next.dzhat.slots();
  auto rn = rho_new.slots();

  dzn[0] = dz[0];  // zero-mode momentum is constant, bit for bit
  for (int k = 1; k < n; ++k)
    dzn[k] = -tab_.dz_from_z[k] * z[k] + tab_.cos_tau[k] * dz[k] -
             tab_.dz_from_rho_old[k] * ro[k] - tab_.dz_from_rho_new[k] * rn[k];
  if (!next.dzhat.all_finite()) return diverged_copy();

  return next;
}

WaveState Stepper::evolve(WaveState state, std::int64_t n_steps,
                          std::span<const Observer> observers) const {
  if (n_steps < 0) throw std::invalid_argument("Stepper::evolve: n_steps must be >= 0");

  const double t0 = state.t;
  const auto fire = [&](std::int64_t k, const WaveState& s) -> bool {
    bool halt = false;
    for (const auto& obs : observers) {
      if (!obs.notify) continue;
      const bool due = (obs.stride > 0 && k % obs.stride == 0) || k == n_steps;
      if (!due) continue;
      try {
        halt = obs.notify(k, s) || halt;
      } catch (const std::exception& e) {
        throw std::runtime_error("observer failed at step " + std::to_string(k) +
                                 " (t = " + std::to_string(s.t) + "): " + e.what());
      }
    }
    return halt;
  };

  if (fire(0, state) && n_steps > 0) {
    state.diverged = true;
    state.diverged_step = 0;
    return state;
  }

  for (std::int64_t k = 1; k <= n_steps; ++k) {
    WaveState next = step(state);
    if (next.diverged) {
      next.diverged_step = k;
      return next;
    }
    state = std::move(next);
    state.t = t0 + static_cast<double>(k) * tab_.tau;
    if (fire(k, state)) {
      state.diverged = true;
      state.diverged_step = k;
      return state;
    }
  }
  return state;
}

}  // namespace gbx
