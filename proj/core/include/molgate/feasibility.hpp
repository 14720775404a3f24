#pragma once

#include <optional>
#include <string>
#include <vector>

#include "molgate/molecules.hpp"

namespace molgate {

/// Spontaneous-emission rate estimate for the storage rotational transition,
/// (1/4 pi eps0) 4 mu^2 B^3 / (3 hbar^4 c^3). An order-of-magnitude dipole
/// form; the N = 2 -> 0 storage transition is itself dipole-forbidden, so the
/// true rate is lower still.
double gamma_rot(double mu_si, double b_rot);

/// Vibrational spontaneous-decay rate (1/4 pi eps0) 4 mu^2 omega^3 / (3 hbar c^3).
double gamma_vib(double mu_si, double omega_vib);

/// Smallest separation keeping the interaction perturbative with the given
/// margin: r_min^3 = ratio * (1/4 pi eps0) mu^2 / (3 B).
double r_min(double mu_si, double b_rot, double ratio = 1e3);

/// Largest separation where the gate still beats vibrational decay with the
/// given margin: r_max^3 = c^3 / (4 pi omega^3 ratio).
double r_max(double omega_vib, double ratio = 1e3);

/// Design summary for one species. Fields that need a missing molecular
/// constant stay empty and flag the row partial (DCl ships with only mu).
struct FeasibilityRow {
  std::string species;
  double mu_debye = 0.0;
  double ratio = 0.0;
  std::optional<double> r_min;             // m
  std::optional<double> r_max;             // m
  std::optional<double> gamma_rot;         // 1/s
  std::optional<double> gamma_vib;         // 1/s
  std::optional<double> tau_at_r_min;      // s
  std::optional<double> tau_at_r_max;      // s
  std::optional<double> gates_at_r_min;    // 1/(gamma_vib tau), best case
  std::optional<double> gates_at_r_max;    // worst case inside the window
  bool partial = false;
};

FeasibilityRow feasibility_row(const MoleculeParams& params, double ratio = 1e3);

/// One row per registry entry, in registry order.
std::vector<FeasibilityRow> feasibility_table(const std::vector<MoleculeParams>& registry,
                                              double ratio = 1e3);

struct SweepPoint {
  double lambda_half;  // m; the inter-molecular separation r = lambda / 2
  double tau;          // s
  double robustness;   // 1/(gamma_vib tau)
};

/// Gate duration and robustness versus trap wavelength, at r = lambda/2,
/// sampled as lambda = lambda_min, lambda_min + step, ..., <= lambda_max.
std::vector<SweepPoint> sweep(const MoleculeParams& params, double lambda_min,
                              double lambda_max, double step);

}  // namespace molgate
