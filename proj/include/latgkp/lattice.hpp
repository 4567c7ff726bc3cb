#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "latgkp/errors.hpp"
#include "latgkp/grid.hpp"
#include "latgkp/state.hpp"
#include "latgkp/units.hpp"

namespace latgkp {

/// Site potential in scaled units: V(x) = -U_r cos^2(x + u).  U_r is the full
/// peak-to-valley lattice depth in recoils; minima sit at x + u = 0 mod pi and
/// the barrier top is at V = 0.
inline double potential_at(double x, double depth, double shift) {
  const double c = std::cos(x + shift);
  return -depth * c * c;
}

inline Eigen::VectorXd potential(const SimGrid& grid, double depth, double shift) {
  if (!std::isfinite(shift)) throw std::invalid_argument("potential: shift must be finite");
  Eigen::VectorXd v(grid.n_points);
  for (int i = 0; i < grid.n_points; ++i) v[i] = potential_at(grid.x(i), depth, shift);
  return v;
}

/// Bound vibrational eigenstates of one lattice site.
struct FockBasis {
  double depth = 0.0;                 // U_r, recoils
  SimGrid grid;
  Eigen::VectorXd energies;           // ascending, recoils
  Eigen::MatrixXd states;             // column n = eigenstate n, grid-normalized
  int n_bound = 0;                    // states with E < 0 (below barrier top)

  int size() const { return static_cast<int>(energies.size()); }

  QuantumState state(int n) const {
    if (n < 0 || n >= size()) throw std::invalid_argument("FockBasis: state index out of range");
    return QuantumState::on_grid(grid, states.col(n).cast<std::complex<double>>());
  }

  /// Grid state from Fock coefficients.
  QuantumState synthesize(const Eigen::VectorXcd& coeffs) const {
    if (coeffs.size() > states.cols())
      throw std::invalid_argument("FockBasis: more coefficients than states");
    Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(grid.n_points);
    for (int n = 0; n < coeffs.size(); ++n)
      amp += coeffs[n] * states.col(n).cast<std::complex<double>>();
    return QuantumState::on_grid(grid, std::move(amp));
  }
};

namespace detail {

/// Toeplitz kernel for the periodic spectral kinetic operator: the matrix
/// depends only on i-j, so one row suffices.
inline Eigen::VectorXd kinetic_kernel(const SimGrid& grid) {
  const int n = grid.n_points;
  const Eigen::VectorXd k = grid.wavenumbers();
  Eigen::VectorXd kern(n);
  for (int d = 0; d < n; ++d) {
    double acc = 0.0;
    for (int m = 0; m < n; ++m) acc += k[m] * k[m] * std::cos(constants::two_pi * d * m / n);
    kern[d] = acc / n;
  }
  return kern;
}

}  // namespace detail

struct EigensolveOptions {
  int n_states = 0;            // 0 -> all bound states found
  double localize_threshold = 0.9;  // min central-period probability (multi-period grids)
  bool require_count = false;  // throw if fewer than n_states retained
};

/// Diagonalizes p^2 - U_r cos^2(x) on the grid and returns site-localized
/// eigenstates with ascending energies.
///
/// On multi-period grids the side wells replicate every level; nearly
/// degenerate clusters are re-mixed to maximize probability in the central
/// period and only combinations holding at least `localize_threshold` of
/// their probability there are retained.
inline FockBasis eigensolve(const SimGrid& grid, double depth,
                            const EigensolveOptions& opts = {}) {
  if (!(depth > 0.0)) throw std::invalid_argument("eigensolve: depth must be > 0");
  const int n = grid.n_points;

  // Assemble H. The kinetic block is Toeplitz; fill from its kernel.
  const Eigen::VectorXd kern = detail::kinetic_kernel(grid);
  Eigen::MatrixXd H(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) H(i, j) = kern[std::abs(i - j)];
  const Eigen::VectorXd v = potential(grid, depth, 0.0);
  H.diagonal() += v;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(H);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolve: diagonalization failed");
  const Eigen::VectorXd& evals = solver.eigenvalues();
  const Eigen::MatrixXd& evecs = solver.eigenvectors();
  const double inv_sqrt_dx = 1.0 / std::sqrt(grid.dx);

  struct Kept {
    double energy;
    Eigen::VectorXd vec;
  };
  std::vector<Kept> kept;

  const double hw = harmonic_frequency(depth);
  const double cluster_gap = 0.3 * hw;

  // Central-period window mask.
  std::vector<int> central;
  for (int i = 0; i < n; ++i)
    if (std::abs(grid.x(i)) <= constants::pi / 2.0) central.push_back(i);

  auto central_prob = [&](const Eigen::VectorXd& w) {
    double p = 0.0;
    for (int i : central) p += w[i] * w[i];
    return p * grid.dx;
  };

  const int want = opts.n_states > 0 ? opts.n_states : n;
  int i = 0;
  while (i < n && static_cast<int>(kept.size()) < want) {
    int j = i;
    while (j + 1 < n && evals[j + 1] - evals[j] < cluster_gap && j - i + 1 < 3 * grid.periods)
      j += 1;
    const int m = j - i + 1;
    if (grid.periods == 1 || m == 1) {
      for (int c = i; c <= j && static_cast<int>(kept.size()) < want; ++c) {
        Eigen::VectorXd w = evecs.col(c) * inv_sqrt_dx;
        if (grid.periods > 1 && central_prob(w) < opts.localize_threshold) continue;
        kept.push_back({evals[c], std::move(w)});
      }
    } else {
      // Re-mix the degenerate cluster: diagonalize the central-window Gram
      // matrix and keep combinations localized in the central site.
      Eigen::MatrixXd sub = evecs.middleCols(i, m) * inv_sqrt_dx;
      Eigen::MatrixXd P(m, m);
      for (int a = 0; a < m; ++a)
        for (int b = a; b < m; ++b) {
          double acc = 0.0;
          for (int idx : central) acc += sub(idx, a) * sub(idx, b);
          P(a, b) = P(b, a) = acc * grid.dx;
        }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> loc(P);
      Eigen::MatrixXd mixed = sub * loc.eigenvectors();
      std::vector<Kept> cluster;
      for (int c = 0; c < m; ++c) {
        Eigen::VectorXd w = mixed.col(c);
        if (central_prob(w) < opts.localize_threshold) continue;
        // Rayleigh quotient over the cluster's spectral span.
        double e = 0.0;
        for (int a = 0; a < m; ++a) {
          const double amp = loc.eigenvectors()(a, c);
          e += amp * amp * evals[i + a];
        }
        cluster.push_back({e, std::move(w)});
      }
      std::sort(cluster.begin(), cluster.end(),
                [](const Kept& a, const Kept& b) { return a.energy < b.energy; });
      for (auto& c : cluster)
        if (static_cast<int>(kept.size()) < want) kept.push_back(std::move(c));
    }
    i = j + 1;
  }

  std::sort(kept.begin(), kept.end(),
            [](const Kept& a, const Kept& b) { return a.energy < b.energy; });

  if (opts.require_count && static_cast<int>(kept.size()) < opts.n_states)
    throw InfeasibleError("eigensolve: only " + std::to_string(kept.size()) +
                          " site-localized states available, " +
                          std::to_string(opts.n_states) + " requested");

  FockBasis basis;
  basis.depth = depth;
  basis.grid = grid;
  basis.energies.resize(kept.size());
  basis.states.resize(n, kept.size());
  for (size_t s = 0; s < kept.size(); ++s) {
    basis.energies[static_cast<int>(s)] = kept[s].energy;
    Eigen::VectorXd w = kept[s].vec;
    // Fix the overall sign so results are reproducible.
    int imax = 0;
    w.cwiseAbs().maxCoeff(&imax);
    if (w[imax] < 0.0) w = -w;
    basis.states.col(static_cast<int>(s)) = w;
  }
  basis.n_bound = static_cast<int>(
      std::count_if(kept.begin(), kept.end(), [](const Kept& k) { return k.energy < 0.0; }));
  return basis;
}

/// Number of site-bound levels (E below the barrier top) at the given depth.
/// Single-period grids take an eigenvalues-only fast path.
inline int bound_state_count(const SimGrid& grid, double depth) {
  if (grid.periods > 1) return eigensolve(grid, depth).n_bound;
  const int n = grid.n_points;
  const Eigen::VectorXd kern = detail::kinetic_kernel(grid);
  Eigen::MatrixXd H(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) H(i, j) = kern[std::abs(i - j)];
  H.diagonal() += potential(grid, depth, 0.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(H, Eigen::EigenvaluesOnly);
  const auto& e = solver.eigenvalues();
  return static_cast<int>(std::count_if(e.data(), e.data() + e.size(),
                                        [](double v) { return v < 0.0; }));
}

struct FockProjection {
  Eigen::VectorXcd coefficients;
  double leakage = 0.0;  // probability outside the projected span
};

/// Coefficients c_n = <n|psi> over the basis states plus the unprojected
/// remainder probability.
inline FockProjection project_to_fock(const QuantumState& state, const FockBasis& basis,
                                      int n_states = 0) {
  if (state.rep != Representation::Grid)
    throw std::invalid_argument("project_to_fock: state must be grid-represented");
  if (!state.grid.same_as(basis.grid))
    throw std::invalid_argument("project_to_fock: state and basis grids differ");
  const int m = n_states > 0 ? std::min(n_states, basis.size()) : basis.size();
  FockProjection out;
  out.coefficients.resize(m);
  for (int n = 0; n < m; ++n) {
    out.coefficients[n] =
        (basis.states.col(n).cast<std::complex<double>>().dot(state.amplitudes)) * state.grid.dx;
  }
  out.leakage = 1.0 - out.coefficients.squaredNorm();
  return out;
}

}  // namespace latgkp
