// Acceptance gate: one pass/fail line per criterion. Exits nonzero when any
// criterion fails. Every numeric target here is frozen from an independent
// route (closed-form evaluation, quadrature, or brute-force search), not from
// the implementation under test.

#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "molgate/dynamics.hpp"
#include "molgate/entangle.hpp"
#include "molgate/errors.hpp"
#include "molgate/feasibility.hpp"
#include "molgate/gate.hpp"
#include "molgate/pulses.hpp"
#include "molgate/quadrature.hpp"
#include "molgate/units.hpp"

using namespace molgate;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& label, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion, label.c_str(),
              detail.c_str());
  if (!ok) ++g_failures;
}

bool within(double value, double target, double rel) {
  return std::abs(value - target) <= rel * std::abs(target);
}

MoleculeParams species(const char* name) { return *find_species(builtin_registry(), name); }

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

// ---- criterion 1: separation window vs the published six-dimer table ----
void criterion_1() {
  struct Row {
    const char* name;
    double r_min_nm, r_max_nm;
  };
  const Row table[] = {{"RbCs", 52.8, 1385}, {"KCs", 56.8, 1033}, {"KRb", 24.8, 906},
                       {"NaCs", 84.3, 698},  {"NaRb", 63.8, 639}, {"NaK", 50.7, 551}};
  bool ok = true;
  double worst = 0.0;
  for (const auto& row : table) {
    const auto mol = species(row.name);
    const double lo = r_min(mol.mu_si(), mol.b_rot_energy()) * 1e9;
    const double hi = r_max(mol.omega_vib()) * 1e9;
    worst = std::max({worst, std::abs(lo / row.r_min_nm - 1.0),
                      std::abs(hi / row.r_max_nm - 1.0)});
    ok = ok && within(lo, row.r_min_nm, 0.01) && within(hi, row.r_max_nm, 0.01);
  }
  report(1, "six-dimer separation window within 1%", ok,
         fmt("worst relative deviation %.2e", worst));
}

// ---- criterion 2: gate-duration spot checks ----
void criterion_2() {
  const double tau_nacs_300 = gate_duration(species("NaCs").mu_si(), 300e-9);
  const double tau_nacs_500 = gate_duration(species("NaCs").mu_si(), 500e-9);
  const double tau_krb_340 = gate_duration(species("KRb").mu_si(), 680e-9 / 2.0);
  const double tau_dcl = gate_duration(species("DCl").mu_si(), 7.03 * units::bohr);

  const bool ok = tau_nacs_300 >= 12e-6 && tau_nacs_300 <= 14e-6 &&
                  tau_nacs_500 >= 55e-6 && tau_nacs_500 <= 62e-6 &&
                  within(tau_krb_340, 1.2e-3, 0.10) && within(tau_dcl, 500e-15, 0.10);
  report(2, "gate durations (NaCs, KRb, DCl)", ok,
         fmt("NaCs %.3g/%.3g s, KRb %.3g s, DCl %.3g s", tau_nacs_300, tau_nacs_500,
             tau_krb_340, tau_dcl));
}

// ---- criterion 3: robustness figures ----
void criterion_3() {
  const auto krb = species("KRb");
  const auto nacs = species("NaCs");
  const double gv_krb = gamma_vib(krb.mu_si(), krb.omega_vib());
  const double gv_nacs = gamma_vib(nacs.mu_si(), nacs.omega_vib());

  const double rob_krb_340 = 1.0 / (gv_krb * gate_duration(krb.mu_si(), 340e-9));

  // The quoted gate-count span covers the species discussed together in the
  // same wavelength window, so the envelope is taken over NaCs and KRb.
  auto rob = [](double gv, double tau) { return 1.0 / (gv * tau); };
  const double lo =
      std::min(rob(gv_nacs, gate_duration(nacs.mu_si(), 500e-9)),
               rob(gv_krb, gate_duration(krb.mu_si(), 500e-9)));
  const double hi =
      std::max(rob(gv_nacs, gate_duration(nacs.mu_si(), 300e-9)),
               rob(gv_krb, gate_duration(krb.mu_si(), 300e-9)));

  const bool ok = within(rob_krb_340, 1.8e4, 0.15) && within(lo, 3e3, 0.25) &&
                  within(hi, 3e4, 0.25);
  report(3, "gate robustness 1/(gamma_vib tau)", ok,
         fmt("KRb@340nm %.3g, window span [%.3g, %.3g]", rob_krb_340, lo, hi));
}

// ---- criterion 4: exact diagonalization vs first-order splitting ----
void criterion_4() {
  const auto mol = species("RbCs");
  const double mu = mol.mu_si();
  const double b = mol.b_rot_energy();
  auto basis = PairBasis::rotational(4);
  // embed psi2/psi3 into the N <= 4 space
  auto sym_state = [&](double sign) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis->size()));
    v(static_cast<Eigen::Index>(basis->index_of({0, 0}, {1, 0}))) = 1.0 / std::sqrt(2.0);
    v(static_cast<Eigen::Index>(basis->index_of({1, 0}, {0, 0}))) = sign / std::sqrt(2.0);
    return v;
  };
  const Eigen::VectorXcd psi2 = sym_state(+1.0), psi3 = sym_state(-1.0);

  auto splitting_error = [&](double r) {
    auto spec = exact_spectrum(build_h0(basis, b) + build_vdip(basis, mu, r));
    double e2 = 0.0, e3 = 0.0, o2 = -1.0, o3 = -1.0;
    for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i) {
      const double ov2 = std::abs(psi2.dot(spec.eigenvectors.col(i)));
      const double ov3 = std::abs(psi3.dot(spec.eigenvectors.col(i)));
      if (ov2 > o2) { o2 = ov2; e2 = spec.eigenvalues(i); }
      if (ov3 > o3) { o3 = ov3; e3 = spec.eigenvalues(i); }
    }
    const double k = dipole_coupling(mu, r);
    return std::pair{std::abs((e3 - e2) - 2.0 * k) / (2.0 * k), e2 < e3};
  };

  // at twice the recommended minimum separation the first-order splitting is
  // accurate to better than the coupling-to-spacing ratio itself
  const double r2 = 2.0 * r_min(mu, b);
  auto [err_at_r2, ordered_at_r2] = splitting_error(r2);
  bool ok = ordered_at_r2 && err_at_r2 < dipole_coupling(mu, r2) / (2.0 * b);

  // falloff study near the regime boundary, where the residual is large
  // enough to resolve in double precision: doubling r must shrink the error
  // by at least 8x (r^-3); in practice the leading residual cancels between
  // the symmetric and antisymmetric states and the decay is closer to r^-6
  const double r_ref = r_min(mu, b, 1.0);  // coupling equals 2B here
  std::array<double, 3> errors{};
  int idx = 0;
  for (double factor : {2.0, 4.0, 8.0}) {
    auto [err, ordered] = splitting_error(factor * r_ref);
    errors[idx++] = err;
    ok = ok && ordered;  // stabilized state below the repulsive one
  }
  ok = ok && errors[0] >= 8.0 * errors[1] && errors[1] >= 8.0 * errors[2];
  report(4, "perturbative splitting oracle and its r^-3 convergence", ok,
         fmt("error %.2e at 2 r_min; falloff %.2e / %.2e / %.2e", err_at_r2, errors[0],
             errors[1], errors[2]));
}

// ---- criterion 5: secular phase slope of the encoded states ----
void criterion_5() {
  const auto mol = species("NaCs");
  const double mu = mol.mu_si();
  const double b = mol.b_rot_energy();
  const double r = 300e-9;
  const double delta = plus_shift_delta(mu, r);

  auto basis = PairBasis::rotational(4);
  auto h0 = build_h0(basis, b);
  auto h = h0 + build_vdip(basis, mu, r);

  const double t_rot = units::hbar * units::pi / b;
  std::vector<double> grid;
  for (int i = 1; i <= 50 * 8; ++i) grid.push_back(t_rot * i / 8.0);  // 50 periods

  auto make = [&](std::initializer_list<std::pair<std::pair<int, int>, double>> amps) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis->size()));
    for (const auto& [nn, a] : amps)
      v(static_cast<Eigen::Index>(basis->index_of({nn.first, 0}, {nn.second, 0}))) = a;
    return PairState(basis, v);
  };
  const auto plusplus = make({{{0, 0}, 0.5}, {{0, 1}, 0.5}, {{1, 0}, 0.5}, {{1, 1}, 0.5}});
  const double s = 1.0 / std::sqrt(2.0);
  const auto zeroplus = make({{{0, 0}, s}, {{0, 1}, s}});

  const auto fit_pp = interaction_phase(plusplus, h, h0, grid);
  const auto fit_zp = interaction_phase(zeroplus, h, h0, grid);

  const double target = delta / units::hbar;
  const bool ok = within(std::abs(fit_pp.slope), target, 0.01) &&
                  std::abs(fit_zp.slope) <= 1e-3 * target;
  report(5, "interaction-picture phase slope: delta/hbar on |++>, 0 on |0+>", ok,
         fmt("slope ratio %.6f, |0+> ratio %.2e", std::abs(fit_pp.slope) / target,
             std::abs(fit_zp.slope) / target));
}

// ---- criterion 6: end-to-end gate ----
void criterion_6() {
  const auto mol = species("NaCs");
  const double r = 2.0 * r_min(mol.mu_si(), mol.b_rot_energy());

  const auto rep11 = run_gate({0, 0, 0, 1}, mol, r);
  const auto rep00 = run_gate({1, 0, 0, 0}, mol, r);
  const auto rep01 = run_gate({0, 1, 0, 0}, mol, r);
  const auto rep10 = run_gate({0, 0, 1, 0}, mol, r);
  const auto repqq = run_gate({0.5, 0.5, 0.5, 0.5}, mol, r);

  const bool phases_ok = within(rep11.phases[3], units::pi, 0.01) &&
                         std::abs(rep00.phases[0]) <= 1e-3 * units::pi &&
                         std::abs(rep01.phases[1]) <= 1e-3 * units::pi &&
                         std::abs(rep10.phases[2]) <= 1e-3 * units::pi;
  const bool ok = phases_ok && repqq.concurrence_out >= 0.99 && repqq.fidelity >= 0.999;
  report(6, "end-to-end conditional-phase gate at wait = tau", ok,
         fmt("phi11 %.6f rad, concurrence %.4f, fidelity %.5f", rep11.phases[3],
             repqq.concurrence_out, repqq.fidelity));
}

// ---- criterion 7: CHSH suite ----
void criterion_7() {
  std::mt19937_64 rng(20240817);
  std::normal_distribution<double> g;
  auto qubit = [&] {
    Eigen::Vector2cd q(std::complex<double>(g(rng), g(rng)),
                       std::complex<double>(g(rng), g(rng)));
    return Eigen::Vector2cd(q / q.norm());
  };

  double worst_product = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Eigen::Vector2cd a = qubit(), b = qubit();
    Eigen::Vector4cd psi;
    psi << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
    const Eigen::Matrix4cd rho = psi * psi.adjoint();
    worst_product = std::max(worst_product, chsh_optimize(rho).value);
  }

  Eigen::Vector4cd bell;
  bell << 1.0 / std::sqrt(2.0), 0, 0, 1.0 / std::sqrt(2.0);
  const double bell_max = chsh_optimize(bell * bell.adjoint()).value;

  const auto mol = species("NaCs");
  const double r = 2.0 * r_min(mol.mu_si(), mol.b_rot_energy());
  const auto rep = run_gate({0.5, 0.5, 0.5, 0.5}, mol, r);

  const bool ok = worst_product <= 2.0 + 1e-9 &&
                  std::abs(bell_max - 2.0 * std::sqrt(2.0)) <= 1e-6 &&
                  rep.chsh_max >= 2.8;
  report(7, "CHSH: product bound, Tsirelson value, post-gate violation", ok,
         fmt("max over products %.9f, Bell %.9f, post-gate %.4f", worst_product, bell_max,
             rep.chsh_max));
}

// ---- criterion 8: angular matrix-element oracle ----
void criterion_8() {
  const auto rule = gauss_legendre(32);
  double worst = 0.0;
  for (int n = 0; n <= 8; ++n) {
    for (int np = 0; np <= 8; ++np) {
      double acc = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * std::legendre(np, rule.nodes[i]) * rule.nodes[i] *
               std::legendre(n, rule.nodes[i]);
      const double oracle = std::sqrt((2.0 * n + 1.0) * (2.0 * np + 1.0)) / 2.0 * acc;
      worst = std::max(worst, std::abs(oracle - cos_theta_element(n, np)));
    }
  }
  double worst_azimuthal = 0.0;
  for (auto [a, b, c, d] : {std::array<int, 4>{0, 1, 0, 1}, std::array<int, 4>{1, 2, 1, 2},
                            std::array<int, 4>{0, 1, 1, 0}, std::array<int, 4>{2, 3, 0, 1}})
    worst_azimuthal = std::max(worst_azimuthal, std::abs(azimuthal_term_element(a, b, c, d)));

  const bool ok = worst <= 1e-12 && worst_azimuthal <= 1e-12;
  report(8, "closed-form angular elements vs quadrature; azimuthal term vanishes", ok,
         fmt("max |closed - quadrature| %.2e, max azimuthal %.2e", worst, worst_azimuthal));
}

// ---- criterion 9: cross-cutting property suites ----
void criterion_9() {
  bool ok = true;
  std::string detail;

  // hermiticity is a constructor invariant
  {
    auto basis = PairBasis::rotational(1);
    Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(4, 4);
    bad(0, 1) = 1.0;
    bool threw = false;
    try {
      HermitianOperator op(basis, bad);
      (void)op;
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    ok = ok && threw;
  }

  // propagator unitarity and norm conservation
  {
    const auto mol = species("NaCs");
    auto basis = PairBasis::rotational(3);
    auto h = build_h0(basis, mol.b_rot_energy()) + build_vdip(basis, mol.mu_si(), 200e-9);
    const Propagator prop(h);
    auto psi = PairState::basis_state(basis, {1, 0}, {0, 0});
    double worst = 0.0;
    for (double t : {1e-7, 3e-5, 2e-3})
      worst = std::max(worst, std::abs(evolve(psi, prop, t).amplitudes().norm() - 1.0));
    ok = ok && worst < 1e-10;
    detail += fmt("norm drift %.1e, ", worst);
  }

  // encode/decode roundtrip fidelity
  {
    auto basis = PairBasis::rovibrational(2, {0, 1});
    double worst = 1.0;
    for (auto l : {LevelLabel{0, 0}, LevelLabel{2, 0}}) {
      auto in = PairState::basis_state(basis, l, {2, 0});
      worst = std::min(worst, std::abs(in.overlap(decode_plus(encode_plus(in, 1), 1))));
    }
    ok = ok && worst >= 1.0 - 1e-10;
    detail += fmt("roundtrip %.12f, ", worst);
  }

  // tau * delta = pi hbar identity across species and separations
  {
    double worst = 0.0;
    for (const char* name : {"RbCs", "KRb", "NaCs", "DCl"})
      for (double r : {50e-9, 300e-9, 1e-6}) {
        const double mu = species(name).mu_si();
        worst = std::max(worst, std::abs(gate_duration(mu, r) * plus_shift_delta(mu, r) /
                                             (units::pi * units::hbar) -
                                         1.0));
      }
    ok = ok && worst < 1e-12;
    detail += fmt("tau*delta/(pi hbar)-1 %.1e", worst);
  }

  // determinism of the CLI front end (when the binary location is exported)
  if (const char* bin = std::getenv("MOLGATE_BIN")) {
    auto capture = [&](const std::string& args) {
      std::string out;
      FILE* pipe = popen((std::string(bin) + " " + args).c_str(), "r");
      if (!pipe) return out;
      char buf[4096];
      std::size_t n = 0;
      while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
      pclose(pipe);
      return out;
    };
    const std::string args = "gate --molecule NaCs --r 300nm --input ++product";
    const std::string a = capture(args), b = capture(args);
    ok = ok && !a.empty() && a == b;
    detail += fmt(", cli bytes %.0f", static_cast<double>(a.size()));
  }

  report(9, "invariant suite (hermiticity, unitarity, roundtrip, timing identity, determinism)",
         ok, detail);
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  const auto elapsed = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  std::printf("%d/9 criteria passed in %.1f s\n", 9 - g_failures, elapsed);
  return g_failures == 0 ? 0 : 1;
}
