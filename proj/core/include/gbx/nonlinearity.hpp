#pragma once

#include <functional>
#include <string>
#include <string_view>

namespace gbx {

// Pointwise nonlinearity f applied node-wise to z; must be total on the reals.
struct Nonlinearity {
  std::function<double(double)> f;
  std::string name;

  double operator()(double z) const { return f(z); }

  static Nonlinearity quadratic() {
    return {[](double z) { return z * z; }, "quadratic"};
  }
  static Nonlinearity cubic() {
    return {[](double z) { return z * z * z; }, "cubic"};
  }
  static Nonlinearity identity() {
    return {[](double z) { return z; }, "identity"};
  }
  static Nonlinearity zero() {
    return {[](double) { return 0.0; }, "zero"};
  }

  // Throws std::invalid_argument for an unknown name.
  static Nonlinearity by_name(std::string_view name);
};

}  // namespace gbx
