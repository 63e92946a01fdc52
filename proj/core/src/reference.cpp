#include "gbx/reference.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "gbx/errors.hpp"
#include "g17.hpp"

namespace gbx {

namespace {

constexpr double kReferenceRealnessGuard = 1e-9;

// First-order form of the mode system: y = (zhat, dzhat),
// y' = (dzhat, -theta^2 zhat - mu^2 rhohat).
struct Derivative {
  SpectrumField dz;
  SpectrumField ddz;
};

}  // namespace

WaveState reference_evolve(const WaveState& initial, double tau_ref, double horizon,
                           const Nonlinearity& f) {
  if (!(tau_ref > 0.0)) throw std::invalid_argument("reference_evolve: tau_ref must be > 0");
  if (horizon < 0.0) throw std::invalid_argument("reference_evolve: horizon must be >= 0");
  if (initial.diverged) throw divergence_error("reference_evolve: initial state diverged");

  const auto n_steps = static_cast<std::int64_t>(std::llround(horizon / tau_ref));
  if (std::abs(n_steps * tau_ref - horizon) > 1e-9 * std::max(1.0, horizon))
    throw std::invalid_argument("reference_evolve: horizon must be a multiple of tau_ref");

  const TorusGrid& grid = initial.grid();
  const int n = grid.modes();
  const SymbolTable sym(grid);
  Dft dft(grid);

  const auto rhs = [&](const SpectrumField& z, const SpectrumField& dz) -> Derivative {
    NodalField zn = dft.inverse(z, kReferenceRealnessGuard);
    for (double& v : zn.values()) v = f(v);
    if (!zn.all_finite())
      throw divergence_error("reference_evolve: overflow in f(z); shrink tau_ref");
    SpectrumField rho = dft.forward(zn);

    Derivative d{dz, SpectrumField(grid)};
    auto zs = z.slots();
    auto rs = rho.slots();
    auto out = d.ddz.slots();
    for (int k = 0; k < n; ++k) {
      const double theta = sym.theta[k];
      const double mu = sym.mu[k];
      out[k] = -theta * theta * zs[k] - mu * mu * rs[k];
    }
    return d;
  };

  const auto axpy = [&](const SpectrumField& y, double alpha, const SpectrumField& d) {
    SpectrumField out = y;
    auto o = out.slots();
    auto ds = d.slots();
    for (int k = 0; k < n; ++k) o[k] += alpha * ds[k];
    return out;
  };

  SpectrumField z = initial.zhat;
  SpectrumField dz = initial.dzhat;

  for (std::int64_t step = 0; step < n_steps; ++step) {
    const Derivative k1 = rhs(z, dz);
    const Derivative k2 = rhs(axpy(z, 0.5 * tau_ref, k1.dz), axpy(dz, 0.5 * tau_ref, k1.ddz));
    const Derivative k3 = rhs(axpy(z, 0.5 * tau_ref, k2.dz), axpy(dz, 0.5 * tau_ref, k2.ddz));
    const Derivative k4 = rhs(axpy(z, tau_ref, k3.dz), axpy(dz, tau_ref, k3.ddz));

    auto zs = z.slots();
    auto dzs = dz.slots();
    const double w = tau_ref / 6.0;
    for (int k = 0; k < n; ++k) {
      zs[k] += w * (k1.dz.slots()[k] + 2.0 * k2.dz.slots()[k] + 2.0 * k3.dz.slots()[k] +
                    k4.dz.slots()[k]);
      dzs[k] += w * (k1.ddz.slots()[k] + 2.0 * k2.ddz.slots()[k] + 2.0 * k3.ddz.slots()[k] +
                     k4.ddz.slots()[k]);
    }
    if (!z.all_finite() || !dz.all_finite())
      throw divergence_error("reference_evolve: non-finite state at step " +
                             std::to_string(step) + "; shrink tau_ref");
  }

  WaveState out(std::move(z), std::move(dz), initial.t + n_steps * tau_ref);
  return out;
}

void write_spectrum(std::ostream& out, const SpectrumField& spectrum) {
  const TorusGrid& g = spectrum.grid();
  for (int l = g.min_mode(); l <= g.max_mode(); ++l) {
    const auto& c = spectrum[l];
    out << l << ' ' << detail::g17(c.real()) << ' ' << detail::g17(c.imag()) << '\n';
  }
}

SpectrumField read_spectrum(std::istream& in, const TorusGrid& grid) {
  SpectrumField spec(grid);
  std::vector<bool> seen(grid.modes(), false);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    int l = 0;
    double re = 0.0, im = 0.0;
    if (!(row >> l >> re >> im))
      throw std::runtime_error("read_spectrum: malformed line '" + line + "'");
    if (l < grid.min_mode() || l > grid.max_mode())
      throw std::runtime_error("read_spectrum: mode index " + std::to_string(l) +
                               " outside grid range");
    spec[l] = {re, im};
    seen[mode_to_slot(l, grid.modes())] = true;
  }
  for (int k = 0; k < grid.modes(); ++k)
    if (!seen[k])
      throw std::runtime_error("read_spectrum: missing mode " +
                               std::to_string(slot_to_mode(k, grid.modes())));
  return spec;
}

void write_spectrum_file(const std::string& path, const SpectrumField& spectrum) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_spectrum_file: cannot open " + path);
  write_spectrum(out, spectrum);
}

SpectrumField read_spectrum_file(const std::string& path, const TorusGrid& grid) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_spectrum_file: cannot open " + path);
  return read_spectrum(in, grid);
}

}  // namespace gbx
