#include <benchmark/benchmark.h>

#include "maxvem/maxvem.hpp"

using namespace maxvem;

namespace
{

void BM_LocalOperators(benchmark::State &state)
{
  const auto mesh = generate_hex(int(state.range(0)));
  const auto geom = compute_geometry(mesh);
  for (auto _ : state)
  {
    auto ops = build_local_operators(mesh, geom);
    benchmark::DoNotOptimize(ops.edge.data());
  }
  state.counters["cells"] = mesh.num_cells();
}
BENCHMARK(BM_LocalOperators)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_AssembleBlocks(benchmark::State &state)
{
  const auto d = Discretization::build(generate_hex(int(state.range(0))), "hex");
  const auto params = PhysParams::uniform(d.mesh.num_cells(), 1, 1, 1, 0.05);
  for (auto _ : state)
  {
    auto sys = assemble_blocks(d.mesh, d.local, d.incidence, params, 1.0);
    benchmark::DoNotOptimize(sys.matrix.values().data());
  }
  state.counters["dofs"] = d.total_dofs();
}
BENCHMARK(BM_AssembleBlocks)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Geometry(benchmark::State &state)
{
  const auto mesh = generate_tet(int(state.range(0)));
  for (auto _ : state)
  {
    auto g = compute_geometry(mesh);
    benchmark::DoNotOptimize(g.cell_volume.data());
  }
}
BENCHMARK(BM_Geometry)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
