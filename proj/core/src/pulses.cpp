#include "molgate/pulses.hpp"

#include <cmath>
#include <stdexcept>

#include "molgate/units.hpp"

namespace molgate {

namespace {

int delta_n(LevelLabel a, LevelLabel b) { return std::abs(a.n - b.n); }

/// 2x2 unitary in the {from, to} subspace, column-major action:
/// a'_from = u(0,0) a_from + u(0,1) a_to, a'_to = u(1,0) a_from + u(1,1) a_to.
Eigen::Matrix2cd pulse_unitary(const PulseSpec& p) {
  using std::complex;
  Eigen::Matrix2cd u;
  if (p.mode == PulseMode::IdealMap) {
    const double c = std::cos(p.area / 2.0);
    const double s = std::sin(p.area / 2.0);
    const complex<double> ph = std::exp(complex<double>(0.0, p.phase));
    u << c, -std::conj(ph) * s,
         ph * s, c;
  } else {
    // Detuned two-level rotating-wave unitary for a square pulse: Rabi rate
    // set by area / duration, generalized rate sqrt(rabi^2 + detuning^2).
    const double t = *p.duration;
    const double rabi = p.area / t;
    const double gen = std::hypot(rabi, p.detuning);
    const double c = std::cos(gen * t / 2.0);
    const double s = (gen > 0.0) ? std::sin(gen * t / 2.0) / gen : t / 2.0;
    const complex<double> ph = std::exp(complex<double>(0.0, p.phase));
    u << complex<double>(c, p.detuning * s),
         complex<double>(0.0, -rabi * s) * std::conj(ph),
         complex<double>(0.0, -rabi * s) * ph,
         complex<double>(c, -p.detuning * s);
  }
  return u;
}

}  // namespace

void validate(const PulseSpec& p) {
  if (p.from == p.to)
    throw std::invalid_argument("pulse: from and to levels are identical");
  if (!(p.area >= 0.0 && p.area <= 2.0 * units::pi))
    throw std::invalid_argument("pulse: area must lie in [0, 2 pi]");
  if (!std::isfinite(p.phase))
    throw std::invalid_argument("pulse: phase must be finite");
  if (p.raman_intermediate) {
    if (delta_n(p.from, *p.raman_intermediate) != 1 ||
        delta_n(*p.raman_intermediate, p.to) != 1)
      throw std::invalid_argument(
          "pulse: Raman intermediate must be one rotational quantum away from both ends");
  } else if (delta_n(p.from, p.to) != 1) {
    throw std::invalid_argument(
        "pulse: direct transition violates the Delta N = +-1 selection rule");
  }
  if (p.mode == PulseMode::RwaRotation) {
    if (!p.duration || *p.duration <= 0.0)
      throw std::invalid_argument("pulse: RWA rotation needs a positive duration");
  } else if (p.duration && *p.duration <= 0.0) {
    throw std::invalid_argument("pulse: duration must be positive when given");
  }
}

PairState apply_pulse(const PairState& state, const PulseSpec& p, int molecule,
                      bool inverse) {
  if (molecule != 1 && molecule != 2)
    throw std::invalid_argument("apply_pulse: molecule must be 1 or 2");
  validate(p);

  Eigen::Matrix2cd u = pulse_unitary(p);
  if (inverse) u = u.adjoint().eval();

  const BasisPtr& basis = state.basis();
  Eigen::VectorXcd amps = state.amplitudes();
  for (std::size_t i = 0; i < basis->size(); ++i) {
    const auto& [l1, l2] = basis->level(i);
    const LevelLabel mine = (molecule == 1) ? l1 : l2;
    const LevelLabel other = (molecule == 1) ? l2 : l1;
    if (!(mine == p.from)) continue;
    const auto j = (molecule == 1) ? basis->index(p.to, other) : basis->index(other, p.to);
    if (!j)
      throw std::invalid_argument("apply_pulse: target level is outside the basis");
    const auto fi = static_cast<Eigen::Index>(i);
    const auto ti = static_cast<Eigen::Index>(*j);
    const std::complex<double> af = amps(fi), at = amps(ti);
    amps(fi) = u(0, 0) * af + u(0, 1) * at;
    amps(ti) = u(1, 0) * af + u(1, 1) * at;
  }
  return PairState(basis, std::move(amps));
}

PairState apply_sequence(const PairState& state, const PulseSequence& seq, int molecule) {
  PairState out = state;
  if (seq.inverted) {
    for (auto it = seq.pulses.rbegin(); it != seq.pulses.rend(); ++it)
      out = apply_pulse(out, *it, molecule, true);
  } else {
    for (const auto& p : seq.pulses) out = apply_pulse(out, p, molecule);
  }
  return out;
}

PulseSequence encode_plus_sequence(double common_phase) {
  // Half transfer |2,0> -> |1,1>, then full two-photon transfer of the
  // remaining |2,0> amplitude to |0,1> through the far-detuned |1,2| level.
  PulseSpec half{LevelLabel{2, 0}, LevelLabel{1, 1}, units::pi / 2.0, common_phase};
  PulseSpec full{LevelLabel{2, 0}, LevelLabel{0, 1}, units::pi, common_phase};
  full.raman_intermediate = LevelLabel{1, 2};
  return PulseSequence{{half, full}, SequenceLabel::EncodePlus, false};
}

PulseSequence decode_plus_sequence(double common_phase) {
  PulseSequence seq = encode_plus_sequence(common_phase);
  seq.label = SequenceLabel::DecodePlus;
  seq.inverted = true;
  return seq;
}

PairState encode_plus(const PairState& state, int molecule) {
  return apply_sequence(state, encode_plus_sequence(), molecule);
}

PairState decode_plus(const PairState& state, int molecule) {
  return apply_sequence(state, decode_plus_sequence(), molecule);
}

bool bandwidth_ok(double duration, double b_rot, double margin) {
  if (duration <= 0.0) throw std::domain_error("bandwidth_ok: duration must be > 0");
  if (b_rot <= 0.0) throw std::domain_error("bandwidth_ok: b_rot must be > 0");
  if (margin < 1.0) throw std::domain_error("bandwidth_ok: margin must be >= 1");
  return 1.0 / duration <= (2.0 * b_rot / units::hbar) / margin;
}

}  // namespace molgate
