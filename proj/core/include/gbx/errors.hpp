#pragma once

#include <stdexcept>
#include <string>

namespace gbx {

// Non-finite data reached an operation that requires finite input, or an
// operation was asked to act on a state already flagged as diverged.
class divergence_error : public std::runtime_error {
 public:
  explicit divergence_error(const std::string& what) : std::runtime_error(what) {}
};

// A spectrum that should represent a real nodal field failed the
// conjugate-symmetry check (imaginary residue above tolerance).
class realness_error : public std::runtime_error {
 public:
  explicit realness_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gbx
