#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "molgate/rotor.hpp"

namespace molgate {

/// Ordered tensor-product basis of two-molecule level pairs with a
/// bidirectional index map. Immutable after construction.
class PairBasis {
 public:
  using Pair = std::pair<LevelLabel, LevelLabel>;

  static std::shared_ptr<const PairBasis> from_levels(std::vector<Pair> levels);
  /// All (N1, N2) with N <= n_max, both molecules in vibrational state v.
  static std::shared_ptr<const PairBasis> rotational(int n_max, int v = 0);
  /// All (N, v) products with N <= n_max and v drawn from `vs`, per molecule.
  static std::shared_ptr<const PairBasis> rovibrational(int n_max, const std::vector<int>& vs);

  std::size_t size() const { return levels_.size(); }
  const Pair& level(std::size_t i) const { return levels_[i]; }
  std::optional<std::size_t> index(LevelLabel l1, LevelLabel l2) const;
  std::size_t index_of(LevelLabel l1, LevelLabel l2) const;  // throws if absent
  bool contains(LevelLabel l1, LevelLabel l2) const { return index(l1, l2).has_value(); }

 private:
  explicit PairBasis(std::vector<Pair> levels);
  std::vector<Pair> levels_;
  std::map<Pair, std::size_t> index_;
};

using BasisPtr = std::shared_ptr<const PairBasis>;

/// Dense Hermitian operator on a PairBasis. Construction enforces
/// ||A - A^dagger||_max <= 1e-12 ||A||_max.
class HermitianOperator {
 public:
  HermitianOperator(BasisPtr basis, Eigen::MatrixXcd m);

  const Eigen::MatrixXcd& matrix() const { return m_; }
  const BasisPtr& basis() const { return basis_; }
  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }

  HermitianOperator operator+(const HermitianOperator& other) const;

 private:
  BasisPtr basis_;
  Eigen::MatrixXcd m_;
};

/// Normalized state vector on a PairBasis.
class PairState {
 public:
  PairState(BasisPtr basis, Eigen::VectorXcd amplitudes);
  static PairState basis_state(BasisPtr basis, LevelLabel l1, LevelLabel l2);

  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Eigen::VectorXcd& amplitudes() { return amps_; }
  const BasisPtr& basis() const { return basis_; }
  std::complex<double> amplitude(LevelLabel l1, LevelLabel l2) const;
  std::complex<double> overlap(const PairState& other) const;

 private:
  BasisPtr basis_;
  Eigen::VectorXcd amps_;
};

/// Diagonal non-interacting Hamiltonian: sum of single-molecule level
/// energies. Pass hbar_omega_vib = 0 for a purely rotational basis.
HermitianOperator build_h0(const BasisPtr& basis, double b_rot, double hbar_omega_vib = 0.0);

/// M = 0 dipole-dipole interaction, -(1/2 pi eps0) (mu^2/r^3) cos(theta1) cos(theta2).
/// Elements connect only states with unchanged vibrational indices on each
/// molecule and obey the Delta N = +-1 selection rule per molecule.
HermitianOperator build_vdip(const BasisPtr& basis, double mu_si, double r);

/// |<01|V_d|10>| = mu^2 / (6 pi eps0 r^3): the first-order splitting scale.
double dipole_coupling(double mu_si, double r);

/// First-order energy shift magnitude of |++>: (1/4 pi eps0) mu^2 / (3 r^3).
double plus_shift_delta(double mu_si, double r);

struct PerturbativeSpectrum {
  std::array<PairState, 4> states;  // psi1..psi4
  std::array<double, 4> shifts;     // first-order shifts, same order
  double coupling;                  // |<01|V_d|10>|
};

/// Degenerate first-order spectrum on the N <= 1 rotational basis. Throws
/// RegimeError unless coupling < 2 b_rot / strictness.
PerturbativeSpectrum perturbative_spectrum(double mu_si, double r, double b_rot,
                                           double strictness = 10.0);

struct Spectrum {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXcd eigenvectors; // columns, orthonormal
};

Spectrum exact_spectrum(const HermitianOperator& h);

/// Time average over one rotational period of <Omega_t Omega_t|V_d|Omega_t Omega_t>
/// for the single-molecule superposition alpha|0,v> + beta|1,v>.
double time_avg_vd(std::complex<double> alpha, std::complex<double> beta,
                   double mu_si, double r, double b_rot);

}  // namespace molgate
