#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace molgate {

/// Spectroscopic parameters of one species. b_rot and omega_vib may be
/// absent (DCl ships with only its dipole moment); operations that need a
/// missing field fail loudly instead of guessing.
struct MoleculeParams {
  std::string name;
  std::optional<double> b_rot_cm1;
  double mu_debye = 0.0;
  std::optional<double> omega_vib_cm1;

  bool complete() const { return b_rot_cm1.has_value() && omega_vib_cm1.has_value(); }

  double mu_si() const;              // C m
  double b_rot_energy() const;       // J; throws IncompleteSpeciesError
  double omega_vib() const;          // rad/s; throws IncompleteSpeciesError
  double hbar_omega_vib() const;     // J; throws IncompleteSpeciesError
};

/// Hard invariant check (positive fields). Returns human-readable warnings
/// for soft issues (rotational structure not fine against the vibrational
/// spacing). Throws std::invalid_argument naming the offending field.
std::vector<std::string> validate(const MoleculeParams& p);

/// The six alkali dimers plus DCl (dipole moment only).
const std::vector<MoleculeParams>& builtin_registry();

std::optional<MoleculeParams> find_species(const std::vector<MoleculeParams>& registry,
                                           std::string_view name);

/// Parses the INI-style molecule data file. Throws ParseError /
/// std::invalid_argument on malformed or invalid records.
std::vector<MoleculeParams> load_registry(std::istream& in);

std::string serialize_registry(const std::vector<MoleculeParams>& records);

/// User entries shadow builtins by (case-sensitive) name.
std::vector<MoleculeParams> merge_registries(std::vector<MoleculeParams> base,
                                             const std::vector<MoleculeParams>& overlay);

}  // namespace molgate
