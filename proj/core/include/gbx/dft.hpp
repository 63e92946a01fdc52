#pragma once

#include <memory>

#include "gbx/field.hpp"
#include "gbx/grid.hpp"

namespace gbx {

// Default bound on the relative imaginary residue tolerated when a spectrum
// is transformed back to a real nodal field.
inline constexpr double kRealnessTol = 1e-12;

// Discrete Fourier transform pair for one grid, with the coefficient
// convention
//
//   forward:  c_l = (1/M) * sum_j v_j exp(-i mu_l (x_j - a))
//   inverse:  v_j = sum_l c_l exp(+i mu_l (x_j - a)),   l = -M/2..M/2-1.
//
// Plans are cached per instance.  An instance belongs to one simulation
// context; distinct instances may be used from different threads.
class Dft {
 public:
  explicit Dft(const TorusGrid& grid);
  ~Dft();

  Dft(Dft&&) noexcept;
  Dft& operator=(Dft&&) noexcept;
  Dft(const Dft&) = delete;
  Dft& operator=(const Dft&) = delete;

  const TorusGrid& grid() const;

  // Throws divergence_error on non-finite input.
  SpectrumField forward(const NodalField& field) const;

  // Discards the imaginary parts after checking that their magnitude stays
  // below realness_tol relative to the real part; throws realness_error
  // otherwise, divergence_error on non-finite coefficients.
  NodalField inverse(const SpectrumField& spectrum, double realness_tol = kRealnessTol) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// One-shot conveniences (plan built per call).
SpectrumField forward_dft(const NodalField& field);
NodalField inverse_dft(const SpectrumField& spectrum, double realness_tol = kRealnessTol);

// Evaluates the trigonometric interpolant sum_l c_l exp(i mu_l (x - a)) at an
// arbitrary x in [a, b] and returns its real part.  Throws std::domain_error
// for x outside [a, b].
double evaluate_interpolant(const SpectrumField& spectrum, double x);

// 2/3-rule truncation: zeroes every mode with |l| > M/3 so quadratic products
// of the survivors cannot alias back onto them.  Off by default everywhere.
void dealias_two_thirds(SpectrumField& spectrum);

}  // namespace gbx
