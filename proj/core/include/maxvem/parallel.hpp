#ifndef MAXVEM_PARALLEL_HPP
#define MAXVEM_PARALLEL_HPP

#include "maxvem/types.hpp"

namespace maxvem
{

// Number of threads parallel kernels currently use.
int num_threads();

// Sets the kernel thread count for the lifetime of the scope and restores it afterwards.
// A count <= 0 leaves the current setting untouched.
class ThreadScope
{
public:
  explicit ThreadScope(int threads);
  ~ThreadScope();
  ThreadScope(const ThreadScope &) = delete;
  ThreadScope &operator=(const ThreadScope &) = delete;

private:
  int previous_;
};

// Reductions are computed over fixed-size blocks whose partial sums are combined in block
// order, so results are bit-identical for any thread count.
double dot(const Vector &x, const Vector &y);
double norm2(const Vector &x);

// y += a * x
void axpy(double a, const Vector &x, Vector &y);

// y = a * x + b * y
void axpby(double a, const Vector &x, double b, Vector &y);

// z = x .* y
void multiply_elementwise(const Vector &x, const Vector &y, Vector &z);

}  // namespace maxvem

#endif  // MAXVEM_PARALLEL_HPP
