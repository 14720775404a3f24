#include "molgate/rotor.hpp"

#include <cmath>
#include <stdexcept>

#include "molgate/quadrature.hpp"
#include "molgate/units.hpp"

namespace molgate {

double rot_energy(int n, double b_rot) {
  if (n < 0) throw std::domain_error("rot_energy: N must be >= 0");
  return b_rot * static_cast<double>(n) * (n + 1.0);
}

double level_energy(LevelLabel l, double b_rot, double hbar_omega_vib) {
  if (l.n < 0 || l.v < 0) throw std::domain_error("level_energy: invalid label");
  return rot_energy(l.n, b_rot) + hbar_omega_vib * (l.v + 0.5);
}

double cos_theta_element(int n, int n_prime) {
  if (n < 0 || n_prime < 0) throw std::domain_error("cos_theta_element: N must be >= 0");
  if (std::abs(n - n_prime) != 1) return 0.0;
  const double n_max = std::max(n, n_prime);
  return n_max / std::sqrt((2.0 * n_max - 1.0) * (2.0 * n_max + 1.0));
}

namespace {

// theta part of <N'| sin(theta) |N> with the Y_{N,0} normalization folded in,
// i.e. sqrt((2N'+1)(2N+1))/(4 pi) * \int P_{N'}(x) sqrt(1-x^2) P_N(x) dx.
double sin_theta_factor(int n, int n_prime) {
  const auto rule = gauss_legendre(128 + 2 * (n + n_prime));
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    acc += rule.weights[i] * std::legendre(n_prime, x) * std::sqrt(1.0 - x * x) *
           std::legendre(n, x);
  }
  return std::sqrt((2.0 * n_prime + 1.0) * (2.0 * n + 1.0)) / (4.0 * units::pi) * acc;
}

}  // namespace

double azimuthal_term_element(int n1, int n1_prime, int n2, int n2_prime) {
  if (n1 < 0 || n1_prime < 0 || n2 < 0 || n2_prime < 0)
    throw std::domain_error("azimuthal_term_element: N must be >= 0");
  // M = 0 states carry no phi dependence, so the azimuthal integral
  // \int\int cos(phi1 - phi2) dphi1 dphi2 factors out. Evaluate it on a
  // periodic trapezoid grid (spectrally accurate) times the theta factors.
  constexpr int n_phi = 64;
  const double dphi = 2.0 * units::pi / n_phi;
  double phi_integral = 0.0;
  for (int i = 0; i < n_phi; ++i)
    for (int j = 0; j < n_phi; ++j)
      phi_integral += std::cos(i * dphi - j * dphi) * dphi * dphi;
  return sin_theta_factor(n1, n1_prime) * sin_theta_factor(n2, n2_prime) * phi_integral;
}

}  // namespace molgate
