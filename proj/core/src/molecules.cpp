#include "molgate/molecules.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "molgate/errors.hpp"
#include "molgate/units.hpp"

namespace molgate {

double MoleculeParams::mu_si() const { return units::debye_to_si(mu_debye); }

double MoleculeParams::b_rot_energy() const {
  if (!b_rot_cm1)
    throw IncompleteSpeciesError(name + ": rotational constant not available");
  return units::wavenumber_to_energy(*b_rot_cm1);
}

double MoleculeParams::omega_vib() const {
  if (!omega_vib_cm1)
    throw IncompleteSpeciesError(name + ": vibrational frequency not available");
  return units::wavenumber_to_angular_frequency(*omega_vib_cm1);
}

double MoleculeParams::hbar_omega_vib() const { return units::hbar * omega_vib(); }

std::vector<std::string> validate(const MoleculeParams& p) {
  if (p.name.empty()) throw std::invalid_argument("molecule record: empty name");
  if (p.mu_debye <= 0.0)
    throw std::invalid_argument(p.name + ": mu_debye must be > 0");
  if (p.b_rot_cm1 && *p.b_rot_cm1 <= 0.0)
    throw std::invalid_argument(p.name + ": b_rot_cm1 must be > 0");
  if (p.omega_vib_cm1 && *p.omega_vib_cm1 <= 0.0)
    throw std::invalid_argument(p.name + ": omega_vib_cm1 must be > 0");
  std::vector<std::string> warnings;
  if (p.b_rot_cm1 && p.omega_vib_cm1 && *p.b_rot_cm1 >= *p.omega_vib_cm1)
    warnings.push_back(p.name + ": b_rot >= omega_vib; rotational structure is not fine against the vibrational spacing");
  return warnings;
}

const std::vector<MoleculeParams>& builtin_registry() {
  static const std::vector<MoleculeParams> registry = {
      {"RbCs", 1.65e-2, 1.21, 49.4},
      {"KCs", 3.08e-2, 1.84, 66.2},
      {"KRb", 3.80e-2, 0.59, 75.5},
      {"NaCs", 5.88e-2, 4.58, 98.0},
      {"NaRb", 7.02e-2, 3.30, 107.0},
      {"NaK", 9.81e-2, 2.76, 124.1},
      {"DCl", std::nullopt, 1.02, std::nullopt},
  };
  return registry;
}

std::optional<MoleculeParams> find_species(const std::vector<MoleculeParams>& registry,
                                           std::string_view name) {
  auto it = std::find_if(registry.begin(), registry.end(),
                         [&](const MoleculeParams& p) { return p.name == name; });
  if (it == registry.end()) return std::nullopt;
  return *it;
}

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  return std::string(s.substr(b, e - b + 1));
}

double parse_number(const std::string& value, const std::string& key, int line) {
  std::size_t pos = 0;
  double x = 0.0;
  try {
    x = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw ParseError("invalid number for '" + key + "': " + value, line);
  }
  if (pos != value.size())
    throw ParseError("trailing characters after number for '" + key + "'", line);
  return x;
}

}  // namespace

std::vector<MoleculeParams> load_registry(std::istream& in) {
  std::vector<MoleculeParams> records;
  MoleculeParams current;
  bool open = false;
  int line_no = 0;

  auto close = [&] {
    if (!open) return;
    validate(current);
    records.push_back(std::move(current));
    current = {};
    open = false;
  };

  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("unterminated section header", line_no);
      close();
      current.name = trim(std::string_view(line).substr(1, line.size() - 2));
      if (current.name.empty()) throw ParseError("empty species name", line_no);
      open = true;
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", line_no);
    if (!open) throw ParseError("field outside of a [Species] section", line_no);
    std::string key = trim(std::string_view(line).substr(0, eq));
    std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key == "b_rot_cm1")
      current.b_rot_cm1 = parse_number(value, key, line_no);
    else if (key == "mu_debye")
      current.mu_debye = parse_number(value, key, line_no);
    else if (key == "omega_vib_cm1")
      current.omega_vib_cm1 = parse_number(value, key, line_no);
    else
      throw ParseError("unknown field '" + key + "'", line_no);
  }
  close();
  return records;
}

std::string serialize_registry(const std::vector<MoleculeParams>& records) {
  std::ostringstream out;
  out.precision(17);
  for (const auto& p : records) {
    out << '[' << p.name << "]\n";
    if (p.b_rot_cm1) out << "b_rot_cm1 = " << *p.b_rot_cm1 << '\n';
    out << "mu_debye = " << p.mu_debye << '\n';
    if (p.omega_vib_cm1) out << "omega_vib_cm1 = " << *p.omega_vib_cm1 << '\n';
    out << '\n';
  }
  return out.str();
}

std::vector<MoleculeParams> merge_registries(std::vector<MoleculeParams> base,
                                             const std::vector<MoleculeParams>& overlay) {
  for (const auto& rec : overlay) {
    auto it = std::find_if(base.begin(), base.end(),
                           [&](const MoleculeParams& p) { return p.name == rec.name; });
    if (it != base.end())
      *it = rec;
    else
      base.push_back(rec);
  }
  return base;
}

}  // namespace molgate
