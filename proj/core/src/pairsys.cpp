#include "molgate/pairsys.hpp"

#include <cmath>
#include <stdexcept>

#include "molgate/errors.hpp"
#include "molgate/units.hpp"

namespace molgate {

PairBasis::PairBasis(std::vector<Pair> levels) : levels_(std::move(levels)) {
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    auto [it, inserted] = index_.emplace(levels_[i], i);
    if (!inserted) throw std::invalid_argument("PairBasis: duplicate product label");
  }
}

std::shared_ptr<const PairBasis> PairBasis::from_levels(std::vector<Pair> levels) {
  return std::shared_ptr<const PairBasis>(new PairBasis(std::move(levels)));
}

std::shared_ptr<const PairBasis> PairBasis::rotational(int n_max, int v) {
  std::vector<Pair> levels;
  for (int n1 = 0; n1 <= n_max; ++n1)
    for (int n2 = 0; n2 <= n_max; ++n2)
      levels.push_back({LevelLabel{n1, v}, LevelLabel{n2, v}});
  return from_levels(std::move(levels));
}

std::shared_ptr<const PairBasis> PairBasis::rovibrational(int n_max,
                                                          const std::vector<int>& vs) {
  std::vector<LevelLabel> single;
  for (int v : vs)
    for (int n = 0; n <= n_max; ++n) single.push_back(LevelLabel{n, v});
  std::vector<Pair> levels;
  for (const auto& l1 : single)
    for (const auto& l2 : single) levels.push_back({l1, l2});
  return from_levels(std::move(levels));
}

std::optional<std::size_t> PairBasis::index(LevelLabel l1, LevelLabel l2) const {
  auto it = index_.find({l1, l2});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t PairBasis::index_of(LevelLabel l1, LevelLabel l2) const {
  auto idx = index(l1, l2);
  if (!idx)
    throw std::invalid_argument("PairBasis: product label not in basis");
  return *idx;
}

HermitianOperator::HermitianOperator(BasisPtr basis, Eigen::MatrixXcd m)
    : basis_(std::move(basis)), m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("HermitianOperator: not square");
  if (basis_ && static_cast<std::size_t>(m_.rows()) != basis_->size())
    throw std::invalid_argument("HermitianOperator: dimension does not match basis");
  const double scale = m_.cwiseAbs().maxCoeff();
  const double dev = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (dev > 1e-12 * std::max(scale, 1e-300))
    throw std::invalid_argument("HermitianOperator: matrix is not Hermitian");
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& other) const {
  if (basis_ != other.basis_)
    throw std::invalid_argument("HermitianOperator: basis mismatch in addition");
  return HermitianOperator(basis_, m_ + other.m_);
}

PairState::PairState(BasisPtr basis, Eigen::VectorXcd amplitudes)
    : basis_(std::move(basis)), amps_(std::move(amplitudes)) {
  if (!basis_ || static_cast<std::size_t>(amps_.size()) != basis_->size())
    throw std::invalid_argument("PairState: dimension does not match basis");
  const double norm = amps_.norm();
  if (std::abs(norm - 1.0) > 1e-8)
    throw std::invalid_argument("PairState: amplitudes not normalized");
  amps_ /= norm;
}

PairState PairState::basis_state(BasisPtr basis, LevelLabel l1, LevelLabel l2) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(basis->size());
  v(static_cast<Eigen::Index>(basis->index_of(l1, l2))) = 1.0;
  return PairState(std::move(basis), std::move(v));
}

std::complex<double> PairState::amplitude(LevelLabel l1, LevelLabel l2) const {
  return amps_(static_cast<Eigen::Index>(basis_->index_of(l1, l2)));
}

std::complex<double> PairState::overlap(const PairState& other) const {
  if (basis_ != other.basis_)
    throw std::invalid_argument("PairState: basis mismatch in overlap");
  return amps_.dot(other.amps_);  // Eigen's dot conjugates the left factor
}

HermitianOperator build_h0(const BasisPtr& basis, double b_rot, double hbar_omega_vib) {
  const auto dim = static_cast<Eigen::Index>(basis->size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const auto& [l1, l2] = basis->level(static_cast<std::size_t>(i));
    m(i, i) = level_energy(l1, b_rot, hbar_omega_vib) + level_energy(l2, b_rot, hbar_omega_vib);
  }
  return HermitianOperator(basis, std::move(m));
}

HermitianOperator build_vdip(const BasisPtr& basis, double mu_si, double r) {
  if (r <= 0.0) throw std::domain_error("build_vdip: separation must be > 0");
  const double prefactor = -(1.0 / (2.0 * units::pi * units::eps0)) * mu_si * mu_si / (r * r * r);
  const auto dim = static_cast<Eigen::Index>(basis->size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const auto& [a1, a2] = basis->level(static_cast<std::size_t>(i));
    for (Eigen::Index j = 0; j < dim; ++j) {
      const auto& [b1, b2] = basis->level(static_cast<std::size_t>(j));
      if (a1.v != b1.v || a2.v != b2.v) continue;  // permanent dipole: v unchanged
      const double c1 = cos_theta_element(a1.n, b1.n);
      const double c2 = cos_theta_element(a2.n, b2.n);
      if (c1 == 0.0 || c2 == 0.0) continue;
      m(i, j) = prefactor * c1 * c2;
    }
  }
  return HermitianOperator(basis, std::move(m));
}

double dipole_coupling(double mu_si, double r) {
  if (r <= 0.0) throw std::domain_error("dipole_coupling: separation must be > 0");
  return mu_si * mu_si / (6.0 * units::pi * units::eps0 * r * r * r);
}

double plus_shift_delta(double mu_si, double r) {
  if (r <= 0.0) throw std::domain_error("plus_shift_delta: separation must be > 0");
  return units::coulomb * mu_si * mu_si / (3.0 * r * r * r);
}

PerturbativeSpectrum perturbative_spectrum(double mu_si, double r, double b_rot,
                                           double strictness) {
  const double coupling = dipole_coupling(mu_si, r);
  if (strictness < 1.0)
    throw std::domain_error("perturbative_spectrum: strictness must be >= 1");
  const double ratio = coupling / (2.0 * b_rot);
  if (ratio > 1.0 / strictness)
    throw RegimeError("dipole coupling is not perturbative against 2 B_rot", ratio);

  auto basis = PairBasis::rotational(1);
  const LevelLabel n0{0, 0}, n1{1, 0};
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  auto make = [&](std::complex<double> a00, std::complex<double> a01,
                  std::complex<double> a10, std::complex<double> a11) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
    v(static_cast<Eigen::Index>(basis->index_of(n0, n0))) = a00;
    v(static_cast<Eigen::Index>(basis->index_of(n0, n1))) = a01;
    v(static_cast<Eigen::Index>(basis->index_of(n1, n0))) = a10;
    v(static_cast<Eigen::Index>(basis->index_of(n1, n1))) = a11;
    return PairState(basis, std::move(v));
  };

  return PerturbativeSpectrum{
      {make(1, 0, 0, 0), make(0, inv_sqrt2, inv_sqrt2, 0),
       make(0, inv_sqrt2, -inv_sqrt2, 0), make(0, 0, 0, 1)},
      {0.0, -coupling, +coupling, 0.0},
      coupling};
}

Spectrum exact_spectrum(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix());
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("exact_spectrum: eigensolver failed");
  return Spectrum{solver.eigenvalues(), solver.eigenvectors()};
}

double time_avg_vd(std::complex<double> alpha, std::complex<double> beta,
                   double mu_si, double r, double b_rot) {
  const double norm2 = std::norm(alpha) + std::norm(beta);
  if (std::abs(norm2 - 1.0) > 1e-10)
    throw std::domain_error("time_avg_vd: superposition not normalized");
  if (r <= 0.0) throw std::domain_error("time_avg_vd: separation must be > 0");
  const double prefactor = -(1.0 / (2.0 * units::pi * units::eps0)) * mu_si * mu_si / (r * r * r);
  const double c01 = cos_theta_element(0, 1);
  const double t_rot = units::hbar * units::pi / b_rot;
  // Periodic integrand: equispaced average is spectrally accurate.
  constexpr int n_samples = 512;
  double acc = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    const double t = t_rot * i / n_samples;
    // alpha|0> + beta e^{-i 2B t/hbar}|1>: instantaneous <cos theta>.
    const std::complex<double> coherence =
        std::conj(alpha) * beta * std::exp(std::complex<double>(0.0, -2.0 * b_rot * t / units::hbar));
    const double cos_avg = 2.0 * coherence.real() * c01;
    acc += cos_avg * cos_avg;
  }
  return prefactor * acc / n_samples;
}

}  // namespace molgate
