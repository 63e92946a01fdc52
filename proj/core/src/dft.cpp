#include "gbx/dft.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <mutex>
#include <stdexcept>

#include "gbx/errors.hpp"

namespace gbx {

namespace {

// FFTW's planner is not thread-safe; execution of distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

void check_realness(const NodalField& out, double max_im, double tol) {
  const double max_re = out.max_abs();
  if (max_im <= tol * max_re) return;
  if (max_im <= 1e-300) return;  // identically-zero fields
  char msg[160];
  std::snprintf(msg, sizeof(msg),
                "inverse transform: imaginary residue %.3e exceeds %.3e relative to the "
                "field scale %.3e",
                max_im, tol, max_re);
  throw realness_error(msg);
}

}  // namespace

struct Dft::Impl {
  explicit Impl(const TorusGrid& g) : grid(g) {
    const int n = grid.modes();
    std::lock_guard<std::mutex> lock(planner_mutex());
    in = fftw_alloc_complex(n);
    out = fftw_alloc_complex(n);
    // FFTW_ESTIMATE keeps planning deterministic across runs.
    fwd = fftw_plan_dft_1d(n, in, out, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_1d(n, in, out, FFTW_BACKWARD, FFTW_ESTIMATE);
  }

  ~Impl() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
    fftw_free(in);
    fftw_free(out);
  }

  TorusGrid grid;
  fftw_complex* in = nullptr;
  fftw_complex* out = nullptr;
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

Dft::Dft(const TorusGrid& grid) : impl_(std::make_unique<Impl>(grid)) {}
Dft::~Dft() = default;
Dft::Dft(Dft&&) noexcept = default;
Dft& Dft::operator=(Dft&&) noexcept = default;

const TorusGrid& Dft::grid() const { return impl_->grid; }

SpectrumField Dft::forward(const NodalField& field) const {
  if (field.grid() != impl_->grid)
    throw std::invalid_argument("Dft::forward: field built on a different grid");
  if (!field.all_finite()) throw divergence_error("Dft::forward: non-finite nodal values");

  const int n = impl_->grid.modes();
  for (int j = 0; j < n; ++j) {
    impl_->in[j][0] = field[j];
    impl_->in[j][1] = 0.0;
  }
  fftw_execute(impl_->fwd);

  SpectrumField spec(impl_->grid);
  const double scale = 1.0 / n;
  auto slots = spec.slots();
  for (int k = 0; k < n; ++k)
    slots[k] = std::complex<double>(impl_->out[k][0] * scale, impl_->out[k][1] * scale);
  return spec;
}

NodalField Dft::inverse(const SpectrumField& spectrum, double realness_tol) const {
  if (spectrum.grid() != impl_->grid)
    throw std::invalid_argument("Dft::inverse: spectrum built on a different grid");
  if (!spectrum.all_finite())
    throw divergence_error("Dft::inverse: non-finite coefficients");

  const int n = impl_->grid.modes();
  auto slots = spectrum.slots();
  for (int k = 0; k < n; ++k) {
    impl_->in[k][0] = slots[k].real();
    impl_->in[k][1] = slots[k].imag();
  }
  fftw_execute(impl_->bwd);

  NodalField field(impl_->grid);
  double max_im = 0.0;
  for (int j = 0; j < n; ++j) {
    field[j] = impl_->out[j][0];
    max_im = std::max(max_im, std::abs(impl_->out[j][1]));
  }
  check_realness(field, max_im, realness_tol);
  return field;
}

SpectrumField forward_dft(const NodalField& field) { return Dft(field.grid()).forward(field); }

NodalField inverse_dft(const SpectrumField& spectrum, double realness_tol) {
  return Dft(spectrum.grid()).inverse(spectrum, realness_tol);
}

void dealias_two_thirds(SpectrumField& spectrum) {
  const TorusGrid& g = spectrum.grid();
  const int cutoff = g.modes() / 3;
  for (int l = g.min_mode(); l <= g.max_mode(); ++l)
    if (std::abs(l) > cutoff) spectrum[l] = {0.0, 0.0};
}

double evaluate_interpolant(const SpectrumField& spectrum, double x) {
  const TorusGrid& g = spectrum.grid();
  if (!(x >= g.a() && x <= g.b()))
    throw std::domain_error("evaluate_interpolant: x outside [a, b]");

  double value = 0.0;
  for (int l = g.min_mode(); l <= g.max_mode(); ++l) {
    const double phase = g.mu(l) * (x - g.a());
    const std::complex<double>& c = spectrum[l];
    value += c.real() * std::cos(phase) - c.imag() * std::sin(phase);
  }
  return value;
}

}  // namespace gbx
