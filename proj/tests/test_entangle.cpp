#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "molgate/entangle.hpp"
#include "molgate/errors.hpp"

using namespace molgate;

namespace {

Eigen::Matrix4cd pure(const Eigen::Vector4cd& psi) {
  Eigen::Vector4cd n = psi / psi.norm();
  return n * n.adjoint();
}

const Eigen::Matrix4cd kBell = pure({1, 0, 0, 1});
const double kTsirelson = 2.0 * std::sqrt(2.0);

Eigen::Matrix2cd random_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::Vector4d q(g(rng), g(rng), g(rng), g(rng));
  q.normalize();
  Eigen::Matrix2cd u;
  u << std::complex<double>(q(0), q(1)), std::complex<double>(q(2), q(3)),
      std::complex<double>(-q(2), q(3)), std::complex<double>(q(0), -q(1));
  return u;
}

Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd k;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) k.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return k;
}

}  // namespace

TEST_CASE("reduce_to_qubits") {
  auto basis = PairBasis::rovibrational(2, {0, 1});
  const LevelLabel zero{0, 0}, one{2, 0};

  auto s00 = PairState::basis_state(basis, zero, zero);
  auto red = reduce_to_qubits(s00, zero, one);
  CHECK(red.leakage == doctest::Approx(0.0));
  CHECK(std::abs(red.rho(0, 0).real() - 1.0) < 1e-14);

  // 1 % of the population parked outside the storage levels
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis->size()));
  v(static_cast<Eigen::Index>(basis->index_of(zero, zero))) = std::sqrt(0.99);
  v(static_cast<Eigen::Index>(basis->index_of({1, 1}, zero))) = 0.1;
  auto leaky = reduce_to_qubits(PairState(basis, v), zero, one);
  CHECK(leaky.leakage == doctest::Approx(0.01).epsilon(1e-10));
  CHECK(leaky.rho.trace().real() == doctest::Approx(1.0).epsilon(1e-12));

  // beyond the 5 % budget the two-qubit picture is refused
  Eigen::VectorXcd w = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis->size()));
  w(static_cast<Eigen::Index>(basis->index_of(zero, zero))) = std::sqrt(0.5);
  w(static_cast<Eigen::Index>(basis->index_of({1, 1}, {1, 1}))) = std::sqrt(0.5);
  CHECK_THROWS_AS(reduce_to_qubits(PairState(basis, w), zero, one), SubspaceError);
}

TEST_CASE("concurrence") {
  CHECK(concurrence(pure({0, 1, 0, 0})) == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(concurrence(pure({0, 1, 1, 0})) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(concurrence(kBell) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(concurrence(0.25 * Eigen::Matrix4cd::Identity()) ==
        doctest::Approx(0.0).epsilon(1e-10));

  // partially entangled pure state: C = sin(2 theta)
  const double theta = 0.3;
  CHECK(concurrence(pure({std::cos(theta), 0, 0, std::sin(theta)})) ==
        doctest::Approx(std::sin(2.0 * theta)).epsilon(1e-10));

  CHECK_THROWS_AS(concurrence(2.0 * kBell), std::invalid_argument);
}

TEST_CASE("chsh at fixed axes") {
  const auto axes = canonical_axes();
  CHECK(chsh_value(kBell, axes) == doctest::Approx(kTsirelson).epsilon(1e-10));
  CHECK(chsh_value(0.25 * Eigen::Matrix4cd::Identity(), axes) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::abs(chsh_value(pure({1, 0, 0, 0}), axes)) <= 2.0 + 1e-12);

  MeasurementAxes bad = axes;
  bad.a *= 2.0;
  CHECK_THROWS_AS(chsh_value(kBell, bad), std::invalid_argument);
}

TEST_CASE("chsh optimization") {
  auto best = chsh_optimize(kBell);
  CHECK(best.value == doctest::Approx(kTsirelson).epsilon(1e-10));
  // the reported axes attain the reported value
  CHECK(chsh_value(kBell, best.axes) == doctest::Approx(best.value).epsilon(1e-10));

  CHECK(chsh_optimize(pure({0, 1, 0, 0})).value == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(chsh_optimize(0.25 * Eigen::Matrix4cd::Identity()).value ==
        doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("random search never beats the closed form") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::Matrix4cd a;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) a(i, j) = std::complex<double>(g(rng), g(rng));
    Eigen::Matrix4cd rho = a * a.adjoint();
    rho /= rho.trace();

    const double closed = chsh_optimize(rho).value;
    CHECK(closed <= kTsirelson + 1e-9);
    auto searched = chsh_random_search(rho, 500, 1234 + trial);
    CHECK(searched.value <= closed + 1e-9);
  }
  // deterministic for a fixed seed
  auto s1 = chsh_random_search(kBell, 200, 42);
  auto s2 = chsh_random_search(kBell, 200, 42);
  CHECK(s1.value == s2.value);
}

TEST_CASE("local-unitary invariance") {
  std::mt19937_64 rng(11);
  const Eigen::Matrix4cd rho = pure({0.8, 0, 0.1, 0.59});
  const double c0 = concurrence(rho);
  const double b0 = chsh_optimize(rho).value;
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::Matrix4cd u = kron(random_su2(rng), random_su2(rng));
    const Eigen::Matrix4cd rotated = u * rho * u.adjoint();
    CHECK(concurrence(rotated) == doctest::Approx(c0).epsilon(1e-7));
    CHECK(chsh_optimize(rotated).value == doctest::Approx(b0).epsilon(1e-9));
  }
}

TEST_CASE("entanglement entropy") {
  CHECK(entanglement_entropy(pure({1, 0, 0, 0})) == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(entanglement_entropy(kBell) == doctest::Approx(1.0).epsilon(1e-10));

  const double theta = M_PI / 8.0;
  const double p = std::sin(theta) * std::sin(theta);
  const double expected = -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
  CHECK(entanglement_entropy(pure({std::cos(theta), 0, 0, std::sin(theta)})) ==
        doctest::Approx(expected).epsilon(1e-10));

  CHECK_THROWS_AS(entanglement_entropy(0.25 * Eigen::Matrix4cd::Identity()),
                  std::invalid_argument);

  // agrees with concurrence on "entangled or not"
  for (auto psi : {Eigen::Vector4cd{1, 0, 0, 0}, Eigen::Vector4cd{0.6, 0, 0, 0.8},
                   Eigen::Vector4cd{0, 1, 1, 0}}) {
    const auto rho = pure(psi);
    const bool c_pos = concurrence(rho) > 1e-9;
    const bool s_pos = entanglement_entropy(rho) > 1e-9;
    CHECK(c_pos == s_pos);
  }
}
