#include <map>
#include <random>

#include <benchmark/benchmark.h>

#include "maxvem/maxvem.hpp"

using namespace maxvem;

namespace
{

const BlockSystem &system_for(int n)
{
  static std::map<int, std::pair<Discretization, BlockSystem>> cache;
  auto it = cache.find(n);
  if (it == cache.end())
  {
    auto d = Discretization::build(generate_hex(n), "hex");
    auto sys = assemble_blocks(d.mesh, d.local, d.incidence,
                               PhysParams::uniform(d.mesh.num_cells(), 1, 1, 1, 0.05), 1.0);
    it = cache.emplace(n, std::pair{std::move(d), std::move(sys)}).first;
  }
  return it->second.second;
}

Vector random_vector(int n)
{
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1, 1);
  Vector v(n);
  for (auto &x : v)
  {
    x = u(rng);
  }
  return v;
}

void BM_SpMV(benchmark::State &state)
{
  const auto &sys = system_for(int(state.range(0)));
  ThreadScope threads(int(state.range(1)));
  const Vector x = random_vector(sys.size());
  Vector y;
  for (auto _ : state)
  {
    sys.matrix.multiply(x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.counters["nnz"] = double(sys.matrix.nnz());
  state.SetBytesProcessed(int64_t(state.iterations()) * int64_t(sys.matrix.nnz()) * 12);
}
BENCHMARK(BM_SpMV)->ArgsProduct({{8, 16}, {1, 2, 4}})->Unit(benchmark::kMicrosecond);

void BM_Dot(benchmark::State &state)
{
  ThreadScope threads(int(state.range(1)));
  const Vector x = random_vector(int(state.range(0))), y = random_vector(int(state.range(0)));
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(dot(x, y));
  }
}
BENCHMARK(BM_Dot)->ArgsProduct({{1 << 16, 1 << 20}, {1, 2, 4}});

void BM_Gmres(benchmark::State &state)
{
  const auto &sys = system_for(int(state.range(0)));
  const JacobiPreconditioner jac(sys.matrix);
  const Vector b = random_vector(sys.size());
  SolverConfig cfg;
  cfg.max_iterations = 30;
  for (auto _ : state)
  {
    auto r = gmres(MatrixOperator(sys.matrix), &jac, b, cfg);
    benchmark::DoNotOptimize(r.x.data());
  }
}
BENCHMARK(BM_Gmres)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
