// Command-line front end: feasibility tables, gate simulations, wavelength
// sweeps, Bell-correlation analysis, and angular density grids.
//
// Exit codes: 0 success, 2 usage / unknown species / bad range, 3 interaction
// too strong for the perturbative protocol, 4 too much leakage to analyze the
// output as two qubits.

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "molgate/entangle.hpp"
#include "molgate/errors.hpp"
#include "molgate/feasibility.hpp"
#include "molgate/gate.hpp"
#include "molgate/units.hpp"

using json = nlohmann::ordered_json;
using namespace molgate;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitRegime = 3;
constexpr int kExitLeakage = 4;

[[noreturn]] void fail(int code, const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(code);
}

double parse_suffixed(const std::string& text, std::initializer_list<std::pair<const char*, double>> units,
                      const std::string& what) {
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &pos);
  } catch (const std::exception&) {
    fail(kExitUsage, "cannot parse " + what + ": '" + text + "'");
  }
  const std::string suffix = text.substr(pos);
  for (const auto& [name, scale] : units)
    if (suffix == name) return value * scale;
  fail(kExitUsage, "unknown unit '" + suffix + "' in " + what + ": '" + text + "'");
}

double parse_distance(const std::string& text) {
  return parse_suffixed(text,
                        {{"nm", 1e-9}, {"um", 1e-6}, {"au", units::bohr}, {"m", 1.0}, {"", 1.0}},
                        "distance");
}

double parse_time(const std::string& text) {
  return parse_suffixed(
      text, {{"fs", 1e-15}, {"ps", 1e-12}, {"ns", 1e-9}, {"us", 1e-6}, {"ms", 1e-3}, {"s", 1.0}, {"", 1.0}},
      "time");
}

std::vector<MoleculeParams> load_registry_with(const std::string& path) {
  std::vector<MoleculeParams> registry = builtin_registry();
  if (path.empty()) return registry;
  std::ifstream in(path);
  if (!in) fail(kExitUsage, "cannot open registry file: " + path);
  try {
    return merge_registries(std::move(registry), load_registry(in));
  } catch (const std::exception& e) {
    fail(kExitUsage, std::string("registry: ") + e.what());
  }
}

MoleculeParams require_species(const std::vector<MoleculeParams>& registry,
                               const std::string& name) {
  auto found = find_species(registry, name);
  if (!found) fail(kExitUsage, "unknown species: " + name);
  return *found;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) fail(kExitUsage, "cannot open output file: " + path);
  return file;
}

json row_to_json(const FeasibilityRow& row) {
  json j;
  j["species"] = row.species;
  j["mu_debye"] = row.mu_debye;
  j["ratio"] = row.ratio;
  j["partial"] = row.partial;
  auto put = [&](const char* key, const std::optional<double>& v) {
    if (v)
      j[key] = *v;
    else
      j[key] = nullptr;
  };
  put("r_min_m", row.r_min);
  put("r_max_m", row.r_max);
  put("gamma_rot_per_s", row.gamma_rot);
  put("gamma_vib_per_s", row.gamma_vib);
  put("tau_at_r_min_s", row.tau_at_r_min);
  put("tau_at_r_max_s", row.tau_at_r_max);
  put("gates_at_r_min", row.gates_at_r_min);
  put("gates_at_r_max", row.gates_at_r_max);
  return j;
}

void print_table(std::ostream& out, const std::vector<FeasibilityRow>& rows) {
  out << "species   mu(D)   r_min(nm)  r_max(nm)  gamma_vib(1/s)  gates(best)\n";
  char buf[160];
  for (const auto& row : rows) {
    auto num = [](const std::optional<double>& v, const char* fmt) {
      char b[32];
      if (!v) return std::string("-");
      std::snprintf(b, sizeof b, fmt, *v);
      return std::string(b);
    };
    std::snprintf(buf, sizeof buf, "%-9s %-7.3g %-10s %-10s %-15s %-12s%s\n",
                  row.species.c_str(), row.mu_debye,
                  num(row.r_min ? std::optional(*row.r_min * 1e9) : std::nullopt, "%.1f").c_str(),
                  num(row.r_max ? std::optional(*row.r_max * 1e9) : std::nullopt, "%.0f").c_str(),
                  num(row.gamma_vib, "%.3g").c_str(), num(row.gates_at_r_min, "%.3g").c_str(),
                  row.partial ? "  (partial)" : "");
    out << buf;
  }
}

Eigen::Vector4cd parse_input_state(const std::string& spec) {
  if (spec == "00") return {1, 0, 0, 0};
  if (spec == "01") return {0, 1, 0, 0};
  if (spec == "10") return {0, 0, 1, 0};
  if (spec == "11") return {0, 0, 0, 1};
  if (spec == "++product") return Eigen::Vector4cd{0.5, 0.5, 0.5, 0.5};
  // Fallback: four comma-separated real coefficients, normalized on load.
  Eigen::Vector4cd v;
  std::stringstream ss(spec);
  std::string item;
  int i = 0;
  while (std::getline(ss, item, ',') && i < 4) {
    try {
      v(i++) = std::stod(item);
    } catch (const std::exception&) {
      fail(kExitUsage, "cannot parse input state coefficient: '" + item + "'");
    }
  }
  if (i != 4 || v.norm() < 1e-12)
    fail(kExitUsage, "input state must be 00, 01, 10, 11, ++product, or four coefficients");
  return v / v.norm();
}

struct GateOptions {
  std::string molecule;
  std::string r_text, lambda_text, wait_text;
  std::string input = "++product";
  std::string pulse_mode = "ideal";
  std::string evolution = "secular";
  int n_max = 4;
  double strictness = 10.0;
};

double resolve_separation(const GateOptions& opt) {
  const bool has_r = !opt.r_text.empty();
  const bool has_lambda = !opt.lambda_text.empty();
  if (has_r == has_lambda)
    fail(kExitUsage, "give exactly one of --r and --lambda");
  return has_r ? parse_distance(opt.r_text) : parse_distance(opt.lambda_text) / 2.0;
}

GateSettings resolve_settings(const GateOptions& opt) {
  GateSettings settings;
  settings.n_max = opt.n_max;
  settings.strictness = opt.strictness;
  if (opt.pulse_mode == "ideal")
    settings.pulse_mode = PulseMode::IdealMap;
  else if (opt.pulse_mode == "rwa")
    settings.pulse_mode = PulseMode::RwaRotation;
  else
    fail(kExitUsage, "pulse mode must be 'ideal' or 'rwa'");
  if (opt.evolution == "secular")
    settings.evolution = EvolutionModel::FirstOrderSecular;
  else if (opt.evolution == "exact")
    settings.evolution = EvolutionModel::ExactPropagation;
  else
    fail(kExitUsage, "evolution must be 'secular' or 'exact'");
  if (!opt.wait_text.empty()) settings.wait = parse_time(opt.wait_text);
  return settings;
}

void merge_config(GateOptions& opt, const std::string& path, const CLI::App* cmd) {
  if (path.empty()) return;
  std::ifstream in(path);
  if (!in) fail(kExitUsage, "cannot open config file: " + path);
  json cfg;
  try {
    cfg = json::parse(in);
  } catch (const std::exception& e) {
    fail(kExitUsage, std::string("config: ") + e.what());
  }
  // Explicit command-line flags win over the config file.
  auto take = [&](const char* key, const char* flag, std::string& slot) {
    if (cfg.contains(key) && cmd->count(flag) == 0) slot = cfg[key].get<std::string>();
  };
  take("molecule", "--molecule", opt.molecule);
  take("r", "--r", opt.r_text);
  take("lambda", "--lambda", opt.lambda_text);
  take("wait", "--wait", opt.wait_text);
  take("input", "--input", opt.input);
  take("pulse_mode", "--pulse-mode", opt.pulse_mode);
  take("evolution", "--evolution", opt.evolution);
  if (cfg.contains("n_max") && cmd->count("--n-max") == 0) opt.n_max = cfg["n_max"].get<int>();
  if (cfg.contains("strictness") && cmd->count("--strictness") == 0)
    opt.strictness = cfg["strictness"].get<double>();
}

json report_to_json(const GateReport& rep) {
  json j;
  j["schema_version"] = 1;
  j["species"] = rep.species;
  j["separation_m"] = rep.separation;
  j["wait_s"] = rep.wait_time;
  j["pulse_mode"] = rep.pulse_mode == PulseMode::IdealMap ? "ideal" : "rwa";
  j["evolution"] =
      rep.evolution == EvolutionModel::FirstOrderSecular ? "secular" : "exact";
  j["phases_rad"] = {rep.phases[0], rep.phases[1], rep.phases[2], rep.phases[3]};
  j["conditional_phase_rad"] = rep.conditional_phase;
  j["fidelity_vs_pi"] = rep.fidelity;
  j["concurrence"] = rep.concurrence_out;
  j["chsh_max"] = rep.chsh_max;
  j["leakage"] = rep.leakage;
  return j;
}

Eigen::Matrix4cd named_qubit_density(const std::string& name) {
  Eigen::Vector4cd psi;
  if (name == "bell")
    psi = Eigen::Vector4cd{1.0 / std::sqrt(2.0), 0, 0, 1.0 / std::sqrt(2.0)};
  else if (name == "singlet")
    psi = Eigen::Vector4cd{0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0};
  else
    psi = parse_input_state(name);
  return psi * psi.adjoint();
}

int cmd_feasibility(const std::string& registry_path, const std::string& molecule, bool all,
                    double ratio, const std::string& out_path, bool as_json) {
  auto registry = load_registry_with(registry_path);
  std::vector<FeasibilityRow> rows;
  if (all) {
    for (const auto& p : registry)
      rows.push_back(feasibility_row(p, ratio));
  } else if (!molecule.empty()) {
    rows.push_back(feasibility_row(require_species(registry, molecule), ratio));
  } else {
    fail(kExitUsage, "give --all or --molecule NAME");
  }
  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  if (as_json) {
    json j = json::array();
    for (const auto& row : rows) j.push_back(row_to_json(row));
    out << j.dump(2) << "\n";
  } else {
    print_table(out, rows);
  }
  return 0;
}

int cmd_gate(const GateOptions& opt, const std::string& registry_path,
             const std::string& out_path) {
  if (opt.molecule.empty()) fail(kExitUsage, "gate: --molecule is required");
  auto registry = load_registry_with(registry_path);
  const MoleculeParams mol = require_species(registry, opt.molecule);
  const double r = resolve_separation(opt);
  const GateSettings settings = resolve_settings(opt);
  const Eigen::Vector4cd input = parse_input_state(opt.input);
  try {
    const GateReport rep = run_gate(input, mol, r, settings);
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    out << report_to_json(rep).dump(2) << "\n";
    return 0;
  } catch (const RegimeError& e) {
    fail(kExitRegime, std::string(e.what()) + " (coupling / 2B = " + std::to_string(e.ratio()) + ")");
  } catch (const SubspaceError& e) {
    fail(kExitLeakage, std::string(e.what()) + " (leakage = " + std::to_string(e.leakage()) + ")");
  } catch (const IncompleteSpeciesError& e) {
    fail(kExitUsage, e.what());
  }
}

int cmd_sweep(const std::string& molecule, const std::string& range_text,
              const std::string& registry_path, const std::string& out_path) {
  auto registry = load_registry_with(registry_path);
  const MoleculeParams mol = require_species(registry, molecule);

  double lo = 0, hi = 0, step = 0;
  char c1 = 0, c2 = 0;
  std::istringstream ss(range_text);
  if (!(ss >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || !ss.eof())
    fail(kExitUsage, "range must be MIN:MAX:STEP in nm, e.g. 600:1100:50");
  if (lo <= 0 || hi < lo || step <= 0) fail(kExitUsage, "invalid wavelength range");

  try {
    const auto points = sweep(mol, lo * 1e-9, hi * 1e-9, step * 1e-9);
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    out << "lambda_half_nm,tau_s,robustness\n";
    out.precision(12);
    for (const auto& p : points)
      out << p.lambda_half * 1e9 << ',' << p.tau << ',' << p.robustness << "\n";
    return 0;
  } catch (const IncompleteSpeciesError& e) {
    fail(kExitUsage, e.what());
  }
}

int cmd_bell(const std::string& state, const GateOptions& opt,
             const std::string& registry_path, const std::string& out_path) {
  Eigen::Matrix4cd rho;
  json source;
  if (!opt.molecule.empty()) {
    auto registry = load_registry_with(registry_path);
    const MoleculeParams mol = require_species(registry, opt.molecule);
    const double r = resolve_separation(opt);
    const GateSettings settings = resolve_settings(opt);
    const Eigen::Vector4cd input = parse_input_state(opt.input);
    try {
      const GateReport rep = run_gate(input, mol, r, settings);
      source = report_to_json(rep);
      rho = rep.rho_out;
    } catch (const RegimeError& e) {
      fail(kExitRegime, e.what());
    } catch (const SubspaceError& e) {
      fail(kExitLeakage, e.what());
    }
  } else {
    if (state.empty()) fail(kExitUsage, "bell: give --state or gate options (--molecule ...)");
    rho = named_qubit_density(state);
  }

  const MeasurementAxes canonical = canonical_axes();
  json j;
  j["schema_version"] = 1;
  if (!source.is_null()) j["gate_report"] = source;
  try {
    j["chsh_canonical_axes"] = chsh_value(rho, canonical);
    const ChshResult best = chsh_optimize(rho);
    j["chsh_max"] = best.value;
    auto vec = [](const Eigen::Vector3d& v) { return json::array({v.x(), v.y(), v.z()}); };
    j["optimal_axes"] = {{"a", vec(best.axes.a)},
                         {"a_prime", vec(best.axes.a_prime)},
                         {"b", vec(best.axes.b)},
                         {"b_prime", vec(best.axes.b_prime)}};
    j["concurrence"] = concurrence(rho);
  } catch (const SubspaceError& e) {
    fail(kExitLeakage, e.what());
  }
  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  out << j.dump(2) << "\n";
  return 0;
}

double y_n0(int n, double theta) {
  return std::sqrt((2.0 * n + 1.0) / (4.0 * units::pi)) * std::legendre(n, std::cos(theta));
}

int cmd_density(const std::string& state, int grid, const std::string& out_path) {
  // Angular probability density |psi(theta1, theta2)|^2 of a two-molecule
  // state on the N <= 1 product basis.
  Eigen::Matrix2cd amps = Eigen::Matrix2cd::Zero();  // amps(n1, n2)
  const double s = 1.0 / std::sqrt(2.0);
  if (state == "psi1" || state == "00") {
    amps(0, 0) = 1;
  } else if (state == "psi2") {
    amps(0, 1) = s;
    amps(1, 0) = s;
  } else if (state == "psi3") {
    amps(0, 1) = s;
    amps(1, 0) = -s;
  } else if (state == "psi4" || state == "11") {
    amps(1, 1) = 1;
  } else if (state == "plusplus") {
    amps << 0.5, 0.5, 0.5, 0.5;
  } else {
    fail(kExitUsage, "density state must be psi1..psi4, 00, 11, or plusplus");
  }
  if (grid < 2) fail(kExitUsage, "grid must have at least 2 points");

  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  out << "theta1,theta2,density\n";
  out.precision(12);
  for (int i = 0; i < grid; ++i) {
    const double t1 = units::pi * i / (grid - 1);
    for (int j = 0; j < grid; ++j) {
      const double t2 = units::pi * j / (grid - 1);
      std::complex<double> psi = 0.0;
      for (int n1 = 0; n1 < 2; ++n1)
        for (int n2 = 0; n2 < 2; ++n2) psi += amps(n1, n2) * y_n0(n1, t1) * y_n0(n2, t2);
      out << t1 << ',' << t2 << ',' << std::norm(psi) << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-molecule dipole-dipole phase gate: feasibility and simulation"};
  app.require_subcommand(1);

  std::string registry_path;
  app.add_option("--registry", registry_path, "extra species data file (INI)");

  // feasibility
  auto* feas = app.add_subcommand("feasibility", "separation windows and decay budgets");
  std::string feas_molecule, feas_out;
  bool feas_all = false, feas_json = false;
  double ratio = 1e3;
  feas->add_flag("--all", feas_all, "all registry species");
  feas->add_option("--molecule", feas_molecule, "single species");
  feas->add_option("--ratio", ratio, "strictness ratio for both bounds");
  feas->add_option("--out", feas_out, "output path (default stdout)");
  feas->add_flag("--json", feas_json, "emit JSON instead of a text table");

  // gate
  auto* gate = app.add_subcommand("gate", "run the conditional-phase protocol");
  GateOptions gopt;
  std::string gate_out, gate_config;
  gate->add_option("--molecule", gopt.molecule, "species name");
  gate->add_option("--r", gopt.r_text, "separation (e.g. 300nm, 7.03au)");
  gate->add_option("--lambda", gopt.lambda_text, "trap wavelength; r = lambda/2");
  gate->add_option("--wait", gopt.wait_text, "interaction time (default: pi-phase time)");
  gate->add_option("--input", gopt.input, "00|01|10|11|++product|c0,c1,c2,c3");
  gate->add_option("--pulse-mode", gopt.pulse_mode, "ideal|rwa");
  gate->add_option("--evolution", gopt.evolution, "secular|exact");
  gate->add_option("--n-max", gopt.n_max, "rotational basis cutoff");
  gate->add_option("--strictness", gopt.strictness, "perturbative-regime guard factor");
  gate->add_option("--config", gate_config, "scenario config (JSON)");
  gate->add_option("--out", gate_out, "report path (default stdout)");

  // sweep
  auto* swp = app.add_subcommand("sweep", "gate duration and robustness vs wavelength");
  std::string sweep_molecule, sweep_range, sweep_out;
  swp->add_option("--molecule", sweep_molecule, "species name")->required();
  swp->add_option("--lambda", sweep_range, "MIN:MAX:STEP in nm")->required();
  swp->add_option("--out", sweep_out, "CSV path (default stdout)");

  // bell
  auto* bell = app.add_subcommand("bell", "CHSH correlations of a two-qubit state");
  std::string bell_state, bell_out;
  GateOptions bopt;
  bell->add_option("--state", bell_state, "bell|singlet|00|01|10|11|++product|c0,c1,c2,c3");
  bell->add_option("--molecule", bopt.molecule, "analyze the post-gate state of this species");
  bell->add_option("--r", bopt.r_text, "separation");
  bell->add_option("--lambda", bopt.lambda_text, "trap wavelength; r = lambda/2");
  bell->add_option("--wait", bopt.wait_text, "interaction time");
  bell->add_option("--input", bopt.input, "gate input state");
  bell->add_option("--pulse-mode", bopt.pulse_mode, "ideal|rwa");
  bell->add_option("--evolution", bopt.evolution, "secular|exact");
  bell->add_option("--out", bell_out, "report path (default stdout)");

  // density
  auto* dens = app.add_subcommand("density", "angular probability density grid");
  std::string dens_state = "psi2", dens_out;
  int dens_grid = 64;
  dens->add_option("--state", dens_state, "psi1..psi4|00|11|plusplus");
  dens->add_option("--grid", dens_grid, "points per angle");
  dens->add_option("--out", dens_out, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  if (feas->parsed())
    return cmd_feasibility(registry_path, feas_molecule, feas_all, ratio, feas_out, feas_json);
  if (gate->parsed()) {
    merge_config(gopt, gate_config, gate);
    return cmd_gate(gopt, registry_path, gate_out);
  }
  if (swp->parsed()) return cmd_sweep(sweep_molecule, sweep_range, registry_path, sweep_out);
  if (bell->parsed()) return cmd_bell(bell_state, bopt, registry_path, bell_out);
  if (dens->parsed()) return cmd_density(dens_state, dens_grid, dens_out);
  return kExitUsage;
}
