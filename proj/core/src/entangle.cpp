#include "molgate/entangle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "molgate/errors.hpp"

namespace molgate {

namespace {

const Eigen::Matrix2cd& pauli(int i) {
  using namespace std::complex_literals;
  static const Eigen::Matrix2cd sx = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
  static const Eigen::Matrix2cd sy = (Eigen::Matrix2cd() << 0, -1i, 1i, 0).finished();
  static const Eigen::Matrix2cd sz = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
  static const Eigen::Matrix2cd* s[3] = {&sx, &sy, &sz};
  return *s[i];
}

Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd k;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) k.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return k;
}

void check_density(const Eigen::Matrix4cd& rho) {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > 1e-8 || std::abs(rho.trace().imag()) > 1e-10)
    throw std::invalid_argument("density matrix trace is not 1");
}

/// T_ij = Tr[rho sigma_i x sigma_j]; real for Hermitian rho.
Eigen::Matrix3d correlation_matrix(const Eigen::Matrix4cd& rho) {
  Eigen::Matrix3d t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      t(i, j) = (rho * kron2(pauli(i), pauli(j))).trace().real();
  return t;
}

double correlation(const Eigen::Matrix3d& t, const Eigen::Vector3d& a,
                   const Eigen::Vector3d& b) {
  return a.dot(t * b);
}

}  // namespace

QubitReduction reduce_to_qubits(const PairState& state, LevelLabel zero, LevelLabel one,
                                double max_leakage) {
  const LevelLabel levels[2] = {zero, one};
  Eigen::Vector4cd psi;
  for (int q1 = 0; q1 < 2; ++q1)
    for (int q2 = 0; q2 < 2; ++q2)
      psi(2 * q1 + q2) = state.amplitude(levels[q1], levels[q2]);
  const double inside = psi.squaredNorm();
  const double leakage = std::max(0.0, 1.0 - inside);
  if (leakage >= max_leakage)
    throw SubspaceError("reduce_to_qubits: population left the storage subspace", leakage);
  psi /= std::sqrt(inside);
  return QubitReduction{psi * psi.adjoint(), leakage};
}

double concurrence(const Eigen::Matrix4cd& rho) {
  check_density(rho);
  const Eigen::Matrix4cd yy = kron2(pauli(1), pauli(1));
  const Eigen::Matrix4cd r = rho * yy * rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(r, /*computeEigenvectors=*/false);
  std::array<double, 4> lams{};
  for (int i = 0; i < 4; ++i) lams[i] = std::sqrt(std::max(0.0, solver.eigenvalues()(i).real()));
  std::sort(lams.begin(), lams.end(), std::greater<>());
  return std::max(0.0, lams[0] - lams[1] - lams[2] - lams[3]);
}

MeasurementAxes canonical_axes() {
  const Eigen::Vector3d z(0, 0, 1), x(1, 0, 0);
  const double s = 1.0 / std::sqrt(2.0);
  return MeasurementAxes{z, x, s * (z + x), s * (z - x)};
}

double chsh_value(const Eigen::Matrix4cd& rho, const MeasurementAxes& axes) {
  check_density(rho);
  for (const auto* v : {&axes.a, &axes.a_prime, &axes.b, &axes.b_prime})
    if (std::abs(v->norm() - 1.0) > 1e-8)
      throw std::invalid_argument("chsh_value: measurement axes must be unit vectors");
  const Eigen::Matrix3d t = correlation_matrix(rho);
  return correlation(t, axes.a, axes.b) + correlation(t, axes.a, axes.b_prime) +
         correlation(t, axes.a_prime, axes.b) - correlation(t, axes.a_prime, axes.b_prime);
}

ChshResult chsh_optimize(const Eigen::Matrix4cd& rho) {
  check_density(rho);
  const Eigen::Matrix3d t = correlation_matrix(rho);
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double s1 = svd.singularValues()(0);
  const double s2 = svd.singularValues()(1);

  MeasurementAxes axes;
  axes.a = svd.matrixU().col(0);
  axes.a_prime = svd.matrixU().col(1);
  // a.T b = s1 cos(beta), a'.T b = s2 sin(beta): the combination
  // 2 s1 cos + 2 s2 sin peaks at tan(beta) = s2 / s1.
  const double beta = std::atan2(s2, s1);
  axes.b = std::cos(beta) * svd.matrixV().col(0) + std::sin(beta) * svd.matrixV().col(1);
  axes.b_prime = std::cos(beta) * svd.matrixV().col(0) - std::sin(beta) * svd.matrixV().col(1);

  return ChshResult{2.0 * std::sqrt(s1 * s1 + s2 * s2), axes};
}

ChshResult chsh_random_search(const Eigen::Matrix4cd& rho, int n, std::uint64_t seed) {
  check_density(rho);
  if (n < 1) throw std::domain_error("chsh_random_search: need at least one draw");
  const Eigen::Matrix3d t = correlation_matrix(rho);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  auto unit = [&] {
    Eigen::Vector3d v;
    do {
      v = Eigen::Vector3d(gauss(rng), gauss(rng), gauss(rng));
    } while (v.norm() < 1e-6);
    return Eigen::Vector3d(v.normalized());
  };
  ChshResult best{-std::numeric_limits<double>::infinity(), {}};
  for (int k = 0; k < n; ++k) {
    MeasurementAxes axes{unit(), unit(), unit(), unit()};
    const double s = correlation(t, axes.a, axes.b) + correlation(t, axes.a, axes.b_prime) +
                     correlation(t, axes.a_prime, axes.b) -
                     correlation(t, axes.a_prime, axes.b_prime);
    if (s > best.value) best = ChshResult{s, axes};
  }
  return best;
}

double entanglement_entropy(const Eigen::Matrix4cd& rho) {
  check_density(rho);
  const double purity = (rho * rho).trace().real();
  if (purity < 1.0 - 1e-6)
    throw std::invalid_argument("entanglement_entropy: state is not pure");
  Eigen::Matrix2cd rho_a = Eigen::Matrix2cd::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) rho_a(i, j) += rho(2 * i + k, 2 * j + k);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(rho_a);
  double s = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double p = solver.eigenvalues()(i);
    if (p > 1e-15) s -= p * std::log2(p);
  }
  return s;
}

}  // namespace molgate
