#include "molgate/dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "molgate/errors.hpp"
#include "molgate/units.hpp"

namespace molgate {

Propagator::Propagator(const HermitianOperator& h) : basis_(h.basis()) {
  Spectrum s = exact_spectrum(h);
  eigenvalues_ = std::move(s.eigenvalues);
  eigenvectors_ = std::move(s.eigenvectors);
}

PairState Propagator::apply(const PairState& state, double t) const {
  if (state.basis() != basis_)
    throw std::invalid_argument("Propagator: state basis does not match");
  Eigen::VectorXcd coeffs = eigenvectors_.adjoint() * state.amplitudes();
  for (Eigen::Index k = 0; k < coeffs.size(); ++k)
    coeffs(k) *= std::exp(std::complex<double>(0.0, -eigenvalues_(k) * t / units::hbar));
  return PairState(basis_, eigenvectors_ * coeffs);
}

PairState evolve(const PairState& state, const Propagator& prop, double t) {
  if (t < 0.0) throw std::domain_error("evolve: t must be >= 0");
  return prop.apply(state, t);
}

PhaseFit interaction_phase(const PairState& state, const HermitianOperator& h_full,
                           const HermitianOperator& h_free,
                           std::span<const double> t_grid) {
  if (t_grid.size() < 2)
    throw std::invalid_argument("interaction_phase: need at least two samples");
  if (h_full.basis() != state.basis() || h_free.basis() != state.basis())
    throw std::invalid_argument("interaction_phase: basis mismatch");

  const Propagator full(h_full);
  const Propagator free(h_free);

  std::vector<double> phases;
  phases.reserve(t_grid.size());
  double previous = 0.0;
  double offset = 0.0;
  for (double t : t_grid) {
    const PairState psi_full = full.apply(state, t);
    const PairState psi_free = free.apply(state, t);
    const std::complex<double> ov = psi_free.overlap(psi_full);
    double phi = std::arg(ov);
    if (!phases.empty()) {
      double step = phi + offset - previous;
      while (step > units::pi) { offset -= 2.0 * units::pi; step -= 2.0 * units::pi; }
      while (step < -units::pi) { offset += 2.0 * units::pi; step += 2.0 * units::pi; }
      if (std::abs(step) > 0.9 * units::pi)
        throw SamplingError("interaction_phase: phase step near pi between samples; use a denser grid");
    }
    previous = phi + offset;
    phases.push_back(previous);
  }

  double st_phi = 0.0, st_t = 0.0;
  for (std::size_t i = 0; i < phases.size(); ++i) {
    st_phi += phases[i] * t_grid[i];
    st_t += t_grid[i] * t_grid[i];
  }
  const double slope = st_phi / st_t;
  double max_res = 0.0;
  for (std::size_t i = 0; i < phases.size(); ++i)
    max_res = std::max(max_res, std::abs(phases[i] - slope * t_grid[i]));
  return PhaseFit{slope, max_res};
}

}  // namespace molgate
