#pragma once

#include <cmath>
#include <stdexcept>

#include "latgkp/constants.hpp"
#include "latgkp/species.hpp"

namespace latgkp {

/// Photon recoil energy hbar^2 (2pi/lambda)^2 / (2m), in joules.
inline double recoil_energy(const AtomSpecies& species, double wavelength) {
  if (!(wavelength > 0.0)) throw std::invalid_argument("recoil_energy: wavelength must be > 0");
  const double k = constants::two_pi / wavelength;
  return constants::hbar * constants::hbar * k * k / (2.0 * species.mass);
}

/// Dimensionless working units of the lattice problem: lengths in 1/k_L,
/// energies in E_R, times in hbar/E_R.
struct UnitSystem {
  double lattice_wavelength = 0.0;  // m
  double wavenumber = 0.0;          // 1/m
  double recoil = 0.0;              // J
  double length_unit = 0.0;         // m   (= 1/k_L)
  double time_unit = 0.0;           // s   (= hbar/E_R)

  static UnitSystem make(const AtomSpecies& species, double wavelength) {
    UnitSystem u;
    u.lattice_wavelength = wavelength;
    u.wavenumber = constants::two_pi / wavelength;
    u.recoil = recoil_energy(species, wavelength);
    u.length_unit = 1.0 / u.wavenumber;
    u.time_unit = constants::hbar / u.recoil;
    return u;
  }
};

enum class Quantity { Length, Time, Energy };

inline double to_lattice_units(double si_value, Quantity kind, const UnitSystem& u) {
  switch (kind) {
    case Quantity::Length: return si_value / u.length_unit;
    case Quantity::Time: return si_value / u.time_unit;
    case Quantity::Energy: return si_value / u.recoil;
  }
  throw std::invalid_argument("to_lattice_units: unknown quantity kind");
}

inline double from_lattice_units(double scaled_value, Quantity kind, const UnitSystem& u) {
  switch (kind) {
    case Quantity::Length: return scaled_value * u.length_unit;
    case Quantity::Time: return scaled_value * u.time_unit;
    case Quantity::Energy: return scaled_value * u.recoil;
  }
  throw std::invalid_argument("from_lattice_units: unknown quantity kind");
}

/// Harmonic level spacing hbar*omega of one lattice site, in units of E_R.
///
/// The scaled site potential is -U_r cos^2(x); expanding about the minimum
/// gives omega = 2 sqrt(U_r) for depth U_r quoted as the full (peak-to-valley)
/// lattice depth in recoils.
inline double harmonic_frequency(double depth_recoils) {
  if (depth_recoils < 0.0) throw std::invalid_argument("harmonic_frequency: depth must be >= 0");
  return 2.0 * std::sqrt(depth_recoils);
}

}  // namespace latgkp
