#ifndef MAXVEM_BENCH_HPP
#define MAXVEM_BENCH_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "maxvem/config.hpp"
#include "maxvem/krylov.hpp"

namespace maxvem
{

// One table cell of an experiment. Iterations are the maximum over the steps run, solve
// time the mean per step (setup excluded).
struct BenchRow
{
  std::string mesh;
  int dofs = 0;
  int free_dofs = 0;
  double tau = 0.0;
  double alpha = 1.0;
  PreconditionerVariant variant = PreconditionerVariant::JacobiAMS;
  int threads = 1;
  int steps = 0;
  double solve_time = 0.0;
  int iterations = 0;
  bool diverged = false;
  double speedup = 1.0;
  double efficiency = 1.0;
};

// mesh x tau x variant, alpha from the config (default 1).
std::vector<BenchRow> bench_optimality(const ExperimentConfig &config,
                                       std::ostream *progress = nullptr);
// mesh x variant x threads at scalability_tau. speedup = T_1 / T_p, efficiency = T_1 / (p T_p),
// measured against the smallest thread count of the same mesh and variant (normally 1).
std::vector<BenchRow> bench_scalability(const ExperimentConfig &config,
                                        std::ostream *progress = nullptr);
// mesh x variant x alpha at stabilization_tau.
std::vector<BenchRow> bench_stabilization(const ExperimentConfig &config,
                                          std::ostream *progress = nullptr);

// Fixed headers:
//   optimality:    mesh,dofs,free_dofs,tau,variant,steps,solve_time,iterations
//   scalability:   mesh,dofs,free_dofs,tau,variant,threads,solve_time,iterations,speedup,efficiency
//   stabilization: mesh,dofs,free_dofs,tau,variant,alpha,solve_time,iterations
// Diverged runs print "--" in every measured column.
void write_optimality_csv(const std::vector<BenchRow> &rows, std::ostream &out);
void write_scalability_csv(const std::vector<BenchRow> &rows, std::ostream &out);
void write_stabilization_csv(const std::vector<BenchRow> &rows, std::ostream &out);

}  // namespace maxvem

#endif  // MAXVEM_BENCH_HPP
