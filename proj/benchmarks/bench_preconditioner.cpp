#include <random>

#include <benchmark/benchmark.h>

#include "maxvem/maxvem.hpp"

using namespace maxvem;

namespace
{

void BM_PreconditionerSetup(benchmark::State &state)
{
  const auto d = Discretization::build(generate_hex(int(state.range(0))), "hex");
  const auto sys = assemble_blocks(d.mesh, d.local, d.incidence,
                                   PhysParams::uniform(d.mesh.num_cells(), 1, 1, 1, 0.05), 1.0);
  const auto variant = static_cast<PreconditionerVariant>(state.range(1));
  for (auto _ : state)
  {
    auto p = build_preconditioner(sys, d.incidence, variant);
    benchmark::DoNotOptimize(p.get());
  }
  state.SetLabel(to_string(variant));
}

void BM_PreconditionerApply(benchmark::State &state)
{
  const auto d = Discretization::build(generate_hex(int(state.range(0))), "hex");
  const auto sys = assemble_blocks(d.mesh, d.local, d.incidence,
                                   PhysParams::uniform(d.mesh.num_cells(), 1, 1, 1, 0.05), 1.0);
  const auto variant = static_cast<PreconditionerVariant>(state.range(1));
  const auto p = build_preconditioner(sys, d.incidence, variant);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  Vector r(sys.size()), z;
  for (auto &x : r)
  {
    x = u(rng);
  }
  for (auto _ : state)
  {
    p->apply(r, z);
    benchmark::DoNotOptimize(z.data());
  }
  state.SetLabel(to_string(variant));
}

// Second argument: 0 exact-exact, 1 jacobi-exact, 2 exact-ams, 3 jacobi-ams.
BENCHMARK(BM_PreconditionerSetup)->ArgsProduct({{8}, {0, 1, 2, 3}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PreconditionerApply)->ArgsProduct({{8, 16}, {1, 3}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
