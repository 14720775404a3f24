#include <benchmark/benchmark.h>

#include "molgate/entangle.hpp"
#include "molgate/feasibility.hpp"
#include "molgate/gate.hpp"
#include "molgate/molecules.hpp"
#include "molgate/pairsys.hpp"

using namespace molgate;

namespace {

MoleculeParams nacs() { return *find_species(builtin_registry(), "NaCs"); }

void bm_exact_spectrum(benchmark::State& state) {
  const auto mol = nacs();
  const auto basis = PairBasis::rotational(static_cast<int>(state.range(0)));
  const auto h = build_h0(basis, mol.b_rot_energy()) +
                 build_vdip(basis, mol.mu_si(), 300e-9);
  for (auto _ : state) {
    auto spec = exact_spectrum(h);
    benchmark::DoNotOptimize(spec.eigenvalues);
  }
}
BENCHMARK(bm_exact_spectrum)->Arg(2)->Arg(4)->Arg(6);

void bm_run_gate(benchmark::State& state) {
  const auto mol = nacs();
  const Eigen::Vector4cd input{0.5, 0.5, 0.5, 0.5};
  GateSettings settings;
  settings.evolution = state.range(0) == 0 ? EvolutionModel::FirstOrderSecular
                                           : EvolutionModel::ExactPropagation;
  for (auto _ : state) {
    auto rep = run_gate(input, mol, 300e-9, settings);
    benchmark::DoNotOptimize(rep.fidelity);
  }
}
BENCHMARK(bm_run_gate)->Arg(0)->Arg(1);

void bm_chsh_optimize(benchmark::State& state) {
  Eigen::Vector4cd bell{1.0 / std::sqrt(2.0), 0, 0, -1.0 / std::sqrt(2.0)};
  const Eigen::Matrix4cd rho = bell * bell.adjoint();
  for (auto _ : state) {
    auto best = chsh_optimize(rho);
    benchmark::DoNotOptimize(best.value);
  }
}
BENCHMARK(bm_chsh_optimize);

void bm_feasibility_table(benchmark::State& state) {
  const auto& registry = builtin_registry();
  for (auto _ : state) {
    auto rows = feasibility_table(registry);
    benchmark::DoNotOptimize(rows.size());
  }
}
BENCHMARK(bm_feasibility_table);

}  // namespace

BENCHMARK_MAIN();
