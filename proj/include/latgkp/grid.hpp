#pragma once

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "latgkp/constants.hpp"

namespace latgkp {

/// Uniform spatial grid in scaled lattice units (x in 1/k_L).  The grid spans
/// an integer odd number of lattice periods (period pi) centered on the
/// potential minimum at x = 0; the right endpoint is excluded so the points
/// are also a valid periodic FFT grid.
struct SimGrid {
  int n_points = 0;
  int periods = 0;
  double x_min = 0.0;
  double x_max = 0.0;  // excluded endpoint
  double dx = 0.0;

  double x(int i) const { return x_min + i * dx; }

  Eigen::VectorXd positions() const {
    Eigen::VectorXd v(n_points);
    for (int i = 0; i < n_points; ++i) v[i] = x(i);
    return v;
  }

  /// FFT wavenumbers matching positions(), standard DFT ordering.
  Eigen::VectorXd wavenumbers() const {
    Eigen::VectorXd k(n_points);
    const double dk = constants::two_pi / (n_points * dx);
    for (int i = 0; i < n_points; ++i) {
      const int m = (i <= n_points / 2 - 1) ? i : i - n_points;
      k[i] = dk * m;
    }
    return k;
  }

  bool same_as(const SimGrid& o) const {
    return n_points == o.n_points && periods == o.periods &&
           std::abs(x_min - o.x_min) < 1e-12 && std::abs(dx - o.dx) < 1e-12;
  }
};

inline int next_power_of_two(int n) {
  int p = 1;
  while (p < n) p *= 2;
  return p;
}

/// Builds a site-centered grid: `periods` must be odd so a potential minimum
/// sits at the center; total points are rounded up to a power of two.
inline SimGrid build_grid(int periods, int points_per_period) {
  if (periods < 1 || periods % 2 == 0)
    throw std::invalid_argument("build_grid: periods must be odd and >= 1");
  if (points_per_period < 64)
    throw std::invalid_argument("build_grid: points_per_period must be >= 64");
  SimGrid g;
  g.periods = periods;
  g.n_points = next_power_of_two(periods * points_per_period);
  const double span = periods * constants::pi;
  g.x_min = -span / 2.0;
  g.x_max = span / 2.0;
  g.dx = span / g.n_points;
  return g;
}

}  // namespace latgkp
