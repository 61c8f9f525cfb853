#include "maxvem/parallel.hpp"

#include <cmath>
#include <vector>

#include <omp.h>

namespace maxvem
{

namespace
{

constexpr Eigen::Index kBlock = 4096;
constexpr Eigen::Index kParallelThreshold = 16384;

template <typename Fn>
double blocked_sum(Eigen::Index n, Fn &&partial)
{
  const Eigen::Index nblocks = (n + kBlock - 1) / kBlock;
  if (nblocks <= 1)
  {
    return n > 0 ? partial(0, n) : 0.0;
  }
  std::vector<double> sums(nblocks);
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (Eigen::Index b = 0; b < nblocks; b++)
  {
    const Eigen::Index lo = b * kBlock;
    sums[b] = partial(lo, std::min(n, lo + kBlock));
  }
  double total = 0.0;
  for (double s : sums)
  {
    total += s;
  }
  return total;
}

}  // namespace

int num_threads()
{
  return omp_get_max_threads();
}

ThreadScope::ThreadScope(int threads) : previous_(omp_get_max_threads())
{
  if (threads > 0)
  {
    omp_set_num_threads(threads);
  }
}

ThreadScope::~ThreadScope()
{
  omp_set_num_threads(previous_);
}

double dot(const Vector &x, const Vector &y)
{
  return blocked_sum(x.size(), [&](Eigen::Index lo, Eigen::Index hi) {
    double s = 0.0;
    for (Eigen::Index i = lo; i < hi; i++)
    {
      s += x[i] * y[i];
    }
    return s;
  });
}

double norm2(const Vector &x)
{
  return std::sqrt(dot(x, x));
}

void axpy(double a, const Vector &x, Vector &y)
{
  const Eigen::Index n = x.size();
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (Eigen::Index i = 0; i < n; i++)
  {
    y[i] += a * x[i];
  }
}

void axpby(double a, const Vector &x, double b, Vector &y)
{
  const Eigen::Index n = x.size();
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (Eigen::Index i = 0; i < n; i++)
  {
    y[i] = a * x[i] + b * y[i];
  }
}

void multiply_elementwise(const Vector &x, const Vector &y, Vector &z)
{
  const Eigen::Index n = x.size();
  z.resize(n);
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (Eigen::Index i = 0; i < n; i++)
  {
    z[i] = x[i] * y[i];
  }
}

}  // namespace maxvem
