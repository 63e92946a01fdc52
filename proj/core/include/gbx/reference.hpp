#pragma once

#include <iosfwd>
#include <string>

#include "gbx/integrator.hpp"

namespace gbx {

// Independent high-accuracy reference for the per-mode ODE system
//
//   d^2/dt^2 c_l + theta_l^2 c_l + mu_l^2 rho_l = 0,   rho = f(z) pseudospectrally,
//
// integrated with the classical 4th-order Runge-Kutta method at a tiny fixed
// step.  Deliberately avoids the variation-of-constants machinery of the
// production stepper; intended for small grids (M <= 128) where theta_max is
// moderate.  Recommended tau_ref <= 1e-4 * min(1, 1/theta_max).
//
// horizon must be an integer multiple of tau_ref.  Throws divergence_error
// with guidance when the stiff system overflows.
WaveState reference_evolve(const WaveState& initial, double tau_ref, double horizon,
                           const Nonlinearity& f);

// Fixture format: one mode per line, "l re im", 17 significant digits.
void write_spectrum(std::ostream& out, const SpectrumField& spectrum);
SpectrumField read_spectrum(std::istream& in, const TorusGrid& grid);

void write_spectrum_file(const std::string& path, const SpectrumField& spectrum);
SpectrumField read_spectrum_file(const std::string& path, const TorusGrid& grid);

}  // namespace gbx
