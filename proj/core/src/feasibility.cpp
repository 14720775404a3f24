#include "molgate/feasibility.hpp"

#include <cmath>
#include <stdexcept>

#include "molgate/gate.hpp"
#include "molgate/units.hpp"

namespace molgate {

double gamma_rot(double mu_si, double b_rot) {
  if (mu_si < 0.0) throw std::domain_error("gamma_rot: dipole moment must be >= 0");
  if (b_rot <= 0.0) throw std::domain_error("gamma_rot: b_rot must be > 0");
  const double b3 = b_rot * b_rot * b_rot;
  const double h4 = std::pow(units::hbar, 4);
  const double c3 = std::pow(units::c, 3);
  return units::coulomb * 4.0 * mu_si * mu_si * b3 / (3.0 * h4 * c3);
}

double gamma_vib(double mu_si, double omega_vib) {
  if (mu_si < 0.0) throw std::domain_error("gamma_vib: dipole moment must be >= 0");
  if (omega_vib <= 0.0) throw std::domain_error("gamma_vib: omega_vib must be > 0");
  const double w3 = omega_vib * omega_vib * omega_vib;
  const double c3 = std::pow(units::c, 3);
  return units::coulomb * 4.0 * mu_si * mu_si * w3 / (3.0 * units::hbar * c3);
}

double r_min(double mu_si, double b_rot, double ratio) {
  if (mu_si <= 0.0) throw std::domain_error("r_min: dipole moment must be > 0");
  if (b_rot <= 0.0) throw std::domain_error("r_min: b_rot must be > 0");
  if (ratio < 1.0) throw std::domain_error("r_min: ratio must be >= 1");
  return std::cbrt(ratio * units::coulomb * mu_si * mu_si / (3.0 * b_rot));
}

double r_max(double omega_vib, double ratio) {
  if (omega_vib <= 0.0) throw std::domain_error("r_max: omega_vib must be > 0");
  if (ratio < 1.0) throw std::domain_error("r_max: ratio must be >= 1");
  const double c3 = std::pow(units::c, 3);
  const double w3 = omega_vib * omega_vib * omega_vib;
  return std::cbrt(c3 / (4.0 * units::pi * w3 * ratio));
}

FeasibilityRow feasibility_row(const MoleculeParams& params, double ratio) {
  FeasibilityRow row;
  row.species = params.name;
  row.mu_debye = params.mu_debye;
  row.ratio = ratio;
  const double mu = params.mu_si();

  if (params.b_rot_cm1) {
    const double b = params.b_rot_energy();
    row.r_min = r_min(mu, b, ratio);
    row.gamma_rot = gamma_rot(mu, b);
  }
  if (params.omega_vib_cm1) {
    row.r_max = r_max(params.omega_vib(), ratio);
    row.gamma_vib = gamma_vib(mu, params.omega_vib());
  }
  if (row.r_min) row.tau_at_r_min = gate_duration(mu, *row.r_min);
  if (row.r_max) row.tau_at_r_max = gate_duration(mu, *row.r_max);
  if (row.gamma_vib && row.tau_at_r_min)
    row.gates_at_r_min = 1.0 / (*row.gamma_vib * *row.tau_at_r_min);
  if (row.gamma_vib && row.tau_at_r_max)
    row.gates_at_r_max = 1.0 / (*row.gamma_vib * *row.tau_at_r_max);
  row.partial = !params.complete();
  return row;
}

std::vector<FeasibilityRow> feasibility_table(const std::vector<MoleculeParams>& registry,
                                              double ratio) {
  std::vector<FeasibilityRow> rows;
  rows.reserve(registry.size());
  for (const auto& p : registry) rows.push_back(feasibility_row(p, ratio));
  return rows;
}

std::vector<SweepPoint> sweep(const MoleculeParams& params, double lambda_min,
                              double lambda_max, double step) {
  if (lambda_min <= 0.0 || lambda_max < lambda_min)
    throw std::domain_error("sweep: need 0 < lambda_min <= lambda_max");
  if (step <= 0.0) throw std::domain_error("sweep: step must be > 0");
  const double mu = params.mu_si();
  const double gv = gamma_vib(mu, params.omega_vib());
  std::vector<SweepPoint> points;
  // Walk by index to avoid accumulating rounding in the last endpoint.
  const auto count = static_cast<long>(std::floor((lambda_max - lambda_min) / step + 1e-9));
  for (long i = 0; i <= count; ++i) {
    const double lambda = lambda_min + step * static_cast<double>(i);
    const double r = lambda / 2.0;
    const double tau = gate_duration(mu, r);
    points.push_back(SweepPoint{r, tau, 1.0 / (gv * tau)});
  }
  return points;
}

}  // namespace molgate
