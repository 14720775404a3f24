#pragma once

#include <optional>
#include <vector>

#include "molgate/pairsys.hpp"

namespace molgate {

enum class PulseMode {
  IdealMap,      // instantaneous exact rotation by the pulse area
  RwaRotation,   // detuned two-level RWA unitary (generalized Rabi)
};

/// One rotation on a targeted single-molecule transition. Direct pulses must
/// obey the Delta N = +-1 selection rule; an effective two-photon Raman pair
/// (Delta N in {0, +-2}) must record its intermediate level.
struct PulseSpec {
  LevelLabel from;
  LevelLabel to;
  double area = 0.0;      // rad, in [0, 2 pi]
  double phase = 0.0;     // rad
  double detuning = 0.0;  // rad/s (RwaRotation only)
  std::optional<double> duration;               // s; required for RwaRotation
  std::optional<LevelLabel> raman_intermediate; // declared two-photon pair
  PulseMode mode = PulseMode::IdealMap;
};

/// Throws std::invalid_argument on selection-rule or area violations.
void validate(const PulseSpec& p);

enum class SequenceLabel { EncodePlus, DecodePlus, Custom };

struct PulseSequence {
  std::vector<PulseSpec> pulses;
  SequenceLabel label = SequenceLabel::Custom;
  bool inverted = false;  // apply inverse rotations in reverse order
};

/// Applies the pulse unitary on molecule 1 or 2, identity elsewhere.
PairState apply_pulse(const PairState& state, const PulseSpec& p, int molecule,
                      bool inverse = false);

PairState apply_sequence(const PairState& state, const PulseSequence& seq, int molecule);

/// pi/2 pulse |2,v0> -> |1,v1> followed by an effective Raman pi transfer
/// |2,v0> -> |0,v1>: maps the qubit |1> amplitude to (|0,v1>+|1,v1>)/sqrt(2).
PulseSequence encode_plus_sequence(double common_phase = 0.0);
PulseSequence decode_plus_sequence(double common_phase = 0.0);

PairState encode_plus(const PairState& state, int molecule);
PairState decode_plus(const PairState& state, int molecule);

/// Spectral-bandwidth sanity check: a pulse of duration dt must satisfy
/// 1/dt << 2 B_rot / hbar (factor `margin`).
bool bandwidth_ok(double duration, double b_rot, double margin = 10.0);

}  // namespace molgate
