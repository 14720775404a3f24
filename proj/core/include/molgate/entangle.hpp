#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "molgate/pairsys.hpp"

namespace molgate {

struct QubitReduction {
  Eigen::Matrix4cd rho;  // normalized two-qubit density matrix
  double leakage;        // population outside the qubit product subspace
};

/// Projects a pair state onto the product subspace spanned by the `zero` and
/// `one` storage levels on each molecule (ordering |00>, |01>, |10>, |11>),
/// renormalizes, and reports the discarded population. Throws SubspaceError
/// when the leakage reaches `max_leakage`.
QubitReduction reduce_to_qubits(const PairState& state, LevelLabel zero, LevelLabel one,
                                double max_leakage = 0.05);

/// Two-qubit concurrence of a density matrix (spin-flip construction).
/// 0 for separable states, 1 for Bell states.
double concurrence(const Eigen::Matrix4cd& rho);

/// Bloch-vector measurement directions for a correlation test: molecule 1
/// measures along a or a', molecule 2 along b or b'.
struct MeasurementAxes {
  Eigen::Vector3d a, a_prime, b, b_prime;
};

/// z / x on molecule 1, (z +- x)/sqrt(2) on molecule 2: saturates the
/// quantum bound for (|00> + |11>)/sqrt(2).
MeasurementAxes canonical_axes();

/// S = E(a,b) + E(a,b') + E(a',b) - E(a',b') from the correlation matrix
/// T_ij = Tr[rho sigma_i x sigma_j].
double chsh_value(const Eigen::Matrix4cd& rho, const MeasurementAxes& axes);

struct ChshResult {
  double value;
  MeasurementAxes axes;
};

/// Closed-form maximum 2 sqrt(s1^2 + s2^2) over measurement directions, with
/// the optimizing axes built from the singular vectors of T. The value
/// exceeds 2 iff some axis choice violates the classical bound and never
/// exceeds 2 sqrt(2).
ChshResult chsh_optimize(const Eigen::Matrix4cd& rho);

/// Monte-Carlo baseline for the closed form: best of `n` uniformly random
/// axis draws. Deterministic for a fixed seed.
ChshResult chsh_random_search(const Eigen::Matrix4cd& rho, int n, std::uint64_t seed);

/// Von Neumann entropy (base-2) of the first qubit's reduced state: 0 for
/// products, 1 for Bell states. Requires a pure rho (purity within 1e-6).
double entanglement_entropy(const Eigen::Matrix4cd& rho);

}  // namespace molgate
