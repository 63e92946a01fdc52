#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "gbx/grid.hpp"

namespace gbx {

// Real nodal values v_j, j = 0..M-1 (periodic closure v_M = v_0 implied).
class NodalField {
 public:
  explicit NodalField(const TorusGrid& grid) : grid_(grid), values_(grid.modes(), 0.0) {}

  const TorusGrid& grid() const { return grid_; }
  int size() const { return grid_.modes(); }

  double& operator[](int j) { return values_[j]; }
  double operator[](int j) const { return values_[j]; }

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }

  double max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
  }

  bool all_finite() const {
    for (double v : values_)
      if (!std::isfinite(v)) return false;
    return true;
  }

 private:
  TorusGrid grid_;
  std::vector<double> values_;
};

// Complex Fourier coefficients c_l, l = -M/2..M/2-1.  Storage follows the
// transform's natural slot order (l mod M); the public index is signed l.
class SpectrumField {
 public:
  explicit SpectrumField(const TorusGrid& grid)
      : grid_(grid), coeffs_(grid.modes(), std::complex<double>{0.0, 0.0}) {}

  const TorusGrid& grid() const { return grid_; }
  int modes() const { return grid_.modes(); }

  std::complex<double>& operator[](int l) { return coeffs_[mode_to_slot(l, modes())]; }
  const std::complex<double>& operator[](int l) const {
    return coeffs_[mode_to_slot(l, modes())];
  }

  std::span<std::complex<double>> slots() { return coeffs_; }
  std::span<const std::complex<double>> slots() const { return coeffs_; }

  double max_abs() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
  }

  bool all_finite() const {
    for (const auto& c : coeffs_)
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
  }

 private:
  TorusGrid grid_;
  std::vector<std::complex<double>> coeffs_;
};

}  // namespace gbx
