#pragma once

#include <span>

#include "molgate/pairsys.hpp"

namespace molgate {

/// Exact unitary evolution U(t) = V exp(-i Lambda t / hbar) V^dagger built
/// from the spectral decomposition of a time-independent Hamiltonian.
class Propagator {
 public:
  explicit Propagator(const HermitianOperator& h);

  PairState apply(const PairState& state, double t) const;
  const BasisPtr& basis() const { return basis_; }

 private:
  BasisPtr basis_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXcd eigenvectors_;
};

PairState evolve(const PairState& state, const Propagator& prop, double t);

struct PhaseFit {
  double slope;         // rad/s, line through the origin
  double max_residual;  // rad
};

/// Unwraps arg<psi_free(t)|psi_full(t)> over t_grid and fits a line through
/// the origin. Throws SamplingError when adjacent samples differ by nearly
/// pi (unwrap ambiguity: use a denser grid).
PhaseFit interaction_phase(const PairState& state, const HermitianOperator& h_full,
                           const HermitianOperator& h_free,
                           std::span<const double> t_grid);

}  // namespace molgate
