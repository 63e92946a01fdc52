#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace gbx {

// Uniform periodic grid on [a, b] with M equispaced nodes x_j = a + j*h,
// h = (b-a)/M.  Fourier modes are indexed by the signed integer
// l = -M/2 .. M/2-1 with wave number mu_l = 2*pi*l/(b-a).
class TorusGrid {
 public:
  TorusGrid(double a, double b, int modes) : a_(a), b_(b), modes_(modes) {
    if (!(b > a)) throw std::invalid_argument("TorusGrid: requires b > a");
    if (modes < 4 || modes % 2 != 0)
      throw std::invalid_argument("TorusGrid: mode count must be even and >= 4");
  }

  double a() const { return a_; }
  double b() const { return b_; }
  int modes() const { return modes_; }

  double length() const { return b_ - a_; }
  double spacing() const { return (b_ - a_) / modes_; }
  double node(int j) const { return a_ + j * spacing(); }

  int min_mode() const { return -modes_ / 2; }
  int max_mode() const { return modes_ / 2 - 1; }

  // Wave number mu_l = 2*pi*l/(b-a) for signed l.
  double mu(int l) const { return 2.0 * pi() * l / (b_ - a_); }

  // Oscillation frequency of mode l under -d_xx + d_xxxx:
  // theta_l = sqrt(mu^2 + mu^4) = |mu|*sqrt(1 + mu^2).  theta_0 == 0 exactly.
  double theta(int l) const {
    const double m = mu(l);
    return std::abs(m) * std::sqrt(1.0 + m * m);
  }

  bool operator==(const TorusGrid&) const = default;

  static constexpr double pi() { return 3.141592653589793238462643383279502884; }

 private:
  double a_, b_;
  int modes_;
};

// Signed mode index l <-> transform-order storage slot (l mod M).
inline int mode_to_slot(int l, int modes) { return l >= 0 ? l : l + modes; }
inline int slot_to_mode(int k, int modes) { return k < modes / 2 ? k : k - modes; }

// Precomputed mu_l and theta_l tables in transform (slot) order.
struct SymbolTable {
  explicit SymbolTable(const TorusGrid& grid)
      : modes(grid.modes()), mu(grid.modes()), theta(grid.modes()) {
    for (int k = 0; k < modes; ++k) {
      const int l = slot_to_mode(k, modes);
      mu[k] = grid.mu(l);
      theta[k] = grid.theta(l);
    }
  }

  double mu_at(int l) const { return mu[mode_to_slot(l, modes)]; }
  double theta_at(int l) const { return theta[mode_to_slot(l, modes)]; }

  int modes;
  std::vector<double> mu;
  std::vector<double> theta;
};

}  // namespace gbx
