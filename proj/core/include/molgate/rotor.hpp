#pragma once

#include <compare>

namespace molgate {

/// One rovibrational level |N, v> of a single molecule. The angular
/// projection M is fixed at zero throughout the protocol and is not stored.
struct LevelLabel {
  int n = 0;  // rotational quantum number, >= 0
  int v = 0;  // vibrational index, >= 0

  friend bool operator==(const LevelLabel&, const LevelLabel&) = default;
  friend auto operator<=>(const LevelLabel&, const LevelLabel&) = default;
};

/// Rigid-rotor energy B_rot N(N+1).
double rot_energy(int n, double b_rot);

/// Harmonic rovibrational ladder: B_rot N(N+1) + hbar omega_vib (v + 1/2).
double level_energy(LevelLabel l, double b_rot, double hbar_omega_vib);

/// <N',0| cos(theta) |N,0>. Nonzero only for |N - N'| = 1, where it equals
/// N_max / sqrt((2 N_max - 1)(2 N_max + 1)) with N_max = max(N, N').
double cos_theta_element(int n, int n_prime);

/// Matrix element of sin(theta1) sin(theta2) cos(phi1 - phi2) between M = 0
/// product states, evaluated by quadrature. Vanishes identically in this
/// subspace; kept as an explicit numerical check.
double azimuthal_term_element(int n1, int n1_prime, int n2, int n2_prime);

}  // namespace molgate
