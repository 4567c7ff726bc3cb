#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

#include "latgkp/grid.hpp"

namespace latgkp {

enum class Representation { Grid, Fock };

/// A normalized pure state, either sampled on a SimGrid (amplitudes carry
/// units of 1/sqrt(dx) so that sum |psi|^2 dx = 1) or as coefficients over a
/// Fock basis (plain unit vector).
struct QuantumState {
  Representation rep = Representation::Grid;
  Eigen::VectorXcd amplitudes;
  SimGrid grid;  // meaningful for rep == Grid

  static QuantumState on_grid(const SimGrid& g, Eigen::VectorXcd amp) {
    QuantumState s;
    s.rep = Representation::Grid;
    s.grid = g;
    s.amplitudes = std::move(amp);
    return s;
  }

  static QuantumState in_fock(Eigen::VectorXcd coeffs) {
    QuantumState s;
    s.rep = Representation::Fock;
    s.amplitudes = std::move(coeffs);
    return s;
  }

  double measure() const { return rep == Representation::Grid ? grid.dx : 1.0; }

  double norm() const { return std::sqrt(amplitudes.squaredNorm() * measure()); }

  void normalize() {
    const double n = norm();
    if (!(n > 0.0)) throw std::invalid_argument("cannot normalize a zero state");
    amplitudes /= n;
  }

  std::complex<double> inner(const QuantumState& other) const {
    if (rep != other.rep || amplitudes.size() != other.amplitudes.size())
      throw std::invalid_argument("inner product: representation or size mismatch");
    if (rep == Representation::Grid && !grid.same_as(other.grid))
      throw std::invalid_argument("inner product: grid mismatch");
    return amplitudes.dot(other.amplitudes) * measure();
  }
};

}  // namespace latgkp
