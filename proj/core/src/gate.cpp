#include "molgate/gate.hpp"

#include <cmath>
#include <stdexcept>

#include "molgate/dynamics.hpp"
#include "molgate/entangle.hpp"
#include "molgate/errors.hpp"
#include "molgate/units.hpp"

namespace molgate {

namespace {

double wrap_pi(double phi) {
  phi = std::fmod(phi, 2.0 * units::pi);
  if (phi > units::pi) phi -= 2.0 * units::pi;
  if (phi <= -units::pi) phi += 2.0 * units::pi;
  return phi;
}

/// Encode, wait, decode for one prepared pair state.
class GateMachine {
 public:
  GateMachine(const MoleculeParams& mol, double r, const GateSettings& s)
      : settings_(s), wait_(s.wait.value_or(gate_duration(mol.mu_si(), r))) {
    if (wait_ < 0.0) throw std::domain_error("run_gate: wait time must be >= 0");
    if (s.n_max < 2)
      throw std::invalid_argument("run_gate: need n_max >= 2 to hold the storage levels");
    const double b = mol.b_rot_energy();
    const double coupling = dipole_coupling(mol.mu_si(), r);
    if (s.strictness < 1.0)
      throw std::domain_error("run_gate: strictness must be >= 1");
    const double ratio = coupling / (2.0 * b);
    if (ratio > 1.0 / s.strictness)
      throw RegimeError("run_gate: dipole coupling too strong for the encoded-phase picture",
                        ratio);

    basis_ = PairBasis::rovibrational(s.n_max, {0, 1});
    delta_ = plus_shift_delta(mol.mu_si(), r);

    encode_ = encode_plus_sequence();
    decode_ = decode_plus_sequence();
    if (s.pulse_mode == PulseMode::RwaRotation) {
      // Resolve the rotational splitting with a tenfold margin.
      const double duration = 10.0 * units::hbar / (2.0 * b) * 2.0;
      for (auto* seq : {&encode_, &decode_})
        for (auto& p : seq->pulses) {
          p.mode = PulseMode::RwaRotation;
          p.duration = duration;
        }
    }

    if (s.evolution == EvolutionModel::ExactPropagation) {
      const HermitianOperator h0 = build_h0(basis_, b, mol.hbar_omega_vib());
      const HermitianOperator v = build_vdip(basis_, mol.mu_si(), r);
      full_.emplace(h0 + v);
      free_.emplace(h0);
    }
  }

  const BasisPtr& basis() const { return basis_; }
  double wait_time() const { return wait_; }

  PairState prepare(const Eigen::Vector4cd& qubits) const {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis_->size()));
    const LevelLabel levels[2] = {kStorageZero, kStorageOne};
    for (int q1 = 0; q1 < 2; ++q1)
      for (int q2 = 0; q2 < 2; ++q2)
        amps(static_cast<Eigen::Index>(basis_->index_of(levels[q1], levels[q2]))) =
            qubits(2 * q1 + q2);
    return PairState(basis_, std::move(amps));
  }

  PairState run(const PairState& input) const {
    PairState psi = apply_sequence(apply_sequence(input, encode_, 1), encode_, 2);
    psi = wait_step(psi);
    return apply_sequence(apply_sequence(psi, decode_, 1), decode_, 2);
  }

 private:
  PairState wait_step(const PairState& psi) const {
    if (settings_.evolution == EvolutionModel::ExactPropagation) {
      const PairState forward = full_->apply(psi, wait_);
      return free_->apply(forward, -wait_);  // strip the non-interacting phases
    }
    // First-order secular step: only the doubly-encoded |++> product is
    // shifted, by -delta, so it picks up exp(+i delta w / hbar).
    Eigen::VectorXcd plus = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis_->size()));
    const LevelLabel lo = kEncodedLower, hi = kEncodedUpper;
    const double half = 0.5;
    for (const auto& l1 : {lo, hi})
      for (const auto& l2 : {lo, hi})
        plus(static_cast<Eigen::Index>(basis_->index_of(l1, l2))) = half;
    const std::complex<double> overlap = plus.dot(psi.amplitudes());
    const std::complex<double> factor =
        std::exp(std::complex<double>(0.0, delta_ * wait_ / units::hbar)) - 1.0;
    Eigen::VectorXcd amps = psi.amplitudes() + factor * overlap * plus;
    return PairState(basis_, std::move(amps));
  }

  GateSettings settings_;
  double wait_;
  BasisPtr basis_;
  double delta_ = 0.0;
  PulseSequence encode_, decode_;
  std::optional<Propagator> full_, free_;
};

}  // namespace

double gate_duration(double mu_si, double r) {
  if (mu_si <= 0.0) throw std::domain_error("gate_duration: dipole moment must be > 0");
  if (r <= 0.0) throw std::domain_error("gate_duration: separation must be > 0");
  return units::pi * units::hbar / plus_shift_delta(mu_si, r);
}

double conditional_phase(double phi00, double phi01, double phi10, double phi11) {
  if (!std::isfinite(phi00) || !std::isfinite(phi01) || !std::isfinite(phi10) ||
      !std::isfinite(phi11))
    throw std::invalid_argument("conditional_phase: phases must be finite");
  return wrap_pi(phi00 + phi11 - phi01 - phi10);
}

double gate_fidelity(const Eigen::Matrix4cd& transfer, double target_phase) {
  const double unitarity =
      (transfer.adjoint() * transfer - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff();
  if (unitarity > 1e-6)
    throw std::invalid_argument("gate_fidelity: transfer matrix is not unitary");
  const double phi00 = std::arg(transfer(0, 0));
  const double phi01 = std::arg(transfer(1, 1));
  const double phi10 = std::arg(transfer(2, 2));
  const double phi11 = std::arg(transfer(3, 3));
  const double conditional = phi11 - phi10 - phi01 + phi00;
  // Local phase frames absorb phi00, phi01 and phi10 exactly; what is left
  // on |11> is the conditional-phase error.
  const std::complex<double> aligned =
      std::abs(transfer(0, 0)) + std::abs(transfer(1, 1)) + std::abs(transfer(2, 2)) +
      std::abs(transfer(3, 3)) *
          std::exp(std::complex<double>(0.0, conditional - target_phase));
  return std::abs(aligned) / 4.0;
}

GateReport run_gate(const Eigen::Vector4cd& input, const MoleculeParams& mol, double r,
                    const GateSettings& settings) {
  const double norm = input.norm();
  if (norm < 1e-12) throw std::invalid_argument("run_gate: input state is zero");
  const Eigen::Vector4cd in = input / norm;

  const GateMachine machine(mol, r, settings);

  // Columns of the transfer matrix: the gate applied to each basis state.
  Eigen::Matrix4cd transfer;
  for (int col = 0; col < 4; ++col) {
    Eigen::Vector4cd e = Eigen::Vector4cd::Zero();
    e(col) = 1.0;
    const PairState out = machine.run(machine.prepare(e));
    const LevelLabel levels[2] = {kStorageZero, kStorageOne};
    for (int q1 = 0; q1 < 2; ++q1)
      for (int q2 = 0; q2 < 2; ++q2)
        transfer(2 * q1 + q2, col) = out.amplitude(levels[q1], levels[q2]);
  }

  const PairState out = machine.run(machine.prepare(in));
  const QubitReduction red = reduce_to_qubits(out, kStorageZero, kStorageOne);

  GateReport report;
  report.phases = {std::arg(transfer(0, 0)), std::arg(transfer(1, 1)),
                   std::arg(transfer(2, 2)), std::arg(transfer(3, 3))};
  report.conditional_phase =
      conditional_phase(report.phases[0], report.phases[1], report.phases[2], report.phases[3]);
  report.fidelity = gate_fidelity(transfer, units::pi);
  report.concurrence_out = concurrence(red.rho);
  report.chsh_max = chsh_optimize(red.rho).value;
  report.leakage = red.leakage;
  report.rho_out = red.rho;
  report.wait_time = machine.wait_time();
  report.separation = r;
  report.species = mol.name;
  report.pulse_mode = settings.pulse_mode;
  report.evolution = settings.evolution;
  return report;
}

}  // namespace molgate
