#pragma once

#include <array>
#include <optional>
#include <string>

#include "molgate/molecules.hpp"
#include "molgate/pairsys.hpp"
#include "molgate/pulses.hpp"

namespace molgate {

/// Qubit storage levels: |0> = |N=0, v=0>, |1> = |N=2, v=0>. Both are inert
/// under the dipole-dipole coupling at first order and connect to the
/// rotating |+> encoding through one- and two-photon transfers.
inline constexpr LevelLabel kStorageZero{0, 0};
inline constexpr LevelLabel kStorageOne{2, 0};

/// Encoded rotating levels: |+> = (|N=0,v=1> + |N=1,v=1>)/sqrt(2).
inline constexpr LevelLabel kEncodedLower{0, 1};
inline constexpr LevelLabel kEncodedUpper{1, 1};

/// How the interaction step between encode and decode is modeled.
enum class EvolutionModel {
  /// Keep only the first-order secular effect: the doubly-encoded product
  /// |++> accumulates exp(i delta w / hbar), everything else is unchanged.
  FirstOrderSecular,
  /// Full spectral propagation under H0 + V_dd with the free phases removed
  /// (interaction picture). Includes all resonant exchange processes, so the
  /// |++> population cycles instead of sitting still; see the revival tests.
  ExactPropagation,
};

struct GateSettings {
  int n_max = 4;                  // rotational cutoff of the simulation basis
  PulseMode pulse_mode = PulseMode::IdealMap;
  EvolutionModel evolution = EvolutionModel::FirstOrderSecular;
  double strictness = 10.0;       // perturbative-regime guard factor
  std::optional<double> wait;     // s; defaults to the pi-phase duration
};

/// Wait time for a conditional phase of pi: 4 pi eps0 * 3 pi hbar r^3 / mu^2.
double gate_duration(double mu_si, double r);

/// phi00 + phi11 - phi01 - phi10, wrapped to (-pi, pi].
double conditional_phase(double phi00, double phi01, double phi10, double phi11);

struct GateReport {
  std::array<double, 4> phases;   // arg of the diagonal transfer amplitudes
  double conditional_phase;       // phi11 - phi10 - phi01 + phi00, in (-pi, pi]
  double fidelity;                // against the ideal pi-conditional-phase gate
  double concurrence_out;         // of the reduced output two-qubit state
  double chsh_max;                // closed-form optimum for the output state
  double leakage;                 // output population outside the storage levels
  Eigen::Matrix4cd rho_out;       // reduced output state on the storage qubits
  double wait_time;               // s
  double separation;              // m
  std::string species;
  PulseMode pulse_mode;
  EvolutionModel evolution;
};

/// Runs encode -> interaction wait -> decode on the given two-qubit input
/// (amplitudes ordered |00>, |01>, |10>, |11>) and, for the fidelity figure,
/// on the four computational basis states. Throws RegimeError outside the
/// perturbative regime and SubspaceError on excessive leakage.
GateReport run_gate(const Eigen::Vector4cd& input, const MoleculeParams& mol, double r,
                    const GateSettings& settings = {});

/// Overlap fidelity |sum_q |t_qq| phase-aligned against diag(1,1,1,e^{i phi})| / 4,
/// maximized over single-qubit phase frames.
double gate_fidelity(const Eigen::Matrix4cd& transfer, double target_phase);

}  // namespace molgate
