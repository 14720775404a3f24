#pragma once

#include <stdexcept>

// Physical constants (CODATA 2018) and the spectroscopic unit conversions
// used throughout the library. All internal computation is in SI.
namespace molgate::units {

inline constexpr double pi = 3.14159265358979323846;

inline constexpr double h = 6.62607015e-34;        // J s (exact)
inline constexpr double hbar = h / (2.0 * pi);     // J s
inline constexpr double c = 2.99792458e8;          // m/s (exact)
inline constexpr double eps0 = 8.8541878128e-12;   // F/m
inline constexpr double coulomb = 1.0 / (4.0 * pi * eps0);  // N m^2 / C^2
inline constexpr double debye = 3.33564e-30;       // C m per D
inline constexpr double bohr = 5.29177210903e-11;  // m per a.u.
inline constexpr double hc_cm = h * c * 100.0;     // J per cm^-1

/// Energy of a transition quoted as a wavenumber: E = h c \tilde{nu}.
inline double wavenumber_to_energy(double v_tilde_cm1) {
  if (v_tilde_cm1 < 0.0) throw std::domain_error("wavenumber must be >= 0");
  return v_tilde_cm1 * hc_cm;
}

/// Angular frequency of a mode quoted as a wavenumber: omega = 2 pi c \tilde{nu}.
inline double wavenumber_to_angular_frequency(double v_tilde_cm1) {
  if (v_tilde_cm1 < 0.0) throw std::domain_error("wavenumber must be >= 0");
  return 2.0 * pi * c * 100.0 * v_tilde_cm1;
}

inline double debye_to_si(double mu_debye) {
  if (mu_debye < 0.0) throw std::domain_error("dipole moment must be >= 0");
  return mu_debye * debye;
}

}  // namespace molgate::units
