#ifndef MAXVEM_KRYLOV_HPP
#define MAXVEM_KRYLOV_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "maxvem/operator.hpp"

namespace maxvem
{

enum class PreconditionerVariant
{
  ExactExact,
  JacobiExact,
  ExactAMS,
  JacobiAMS,
};

std::string to_string(PreconditionerVariant v);
// Accepts "exact-exact", "jacobi-exact", "exact-ams", "jacobi-ams" (case-insensitive,
// '_' for '-'). Throws InvalidArgument otherwise.
PreconditionerVariant parse_variant(const std::string &name);

struct SolverConfig
{
  double abs_tol = 1e-12;
  double rel_tol = 1e-6;
  int max_iterations = 1000;
  PreconditionerVariant variant = PreconditionerVariant::JacobiAMS;
  int threads = 0;  // 0 keeps the current kernel thread count

  void validate() const;
};

struct SolveReport
{
  int iterations = 0;
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  double solve_time = 0.0;  // seconds
  bool converged = false;
  // Residual norm before the first iteration and after each one, as tracked by the
  // Givens recurrence. abs_residual is the recomputed true residual.
  std::vector<double> history;
  double rhs_norm = 0.0;
};

// CSV with header "iteration,abs_residual,rel_residual".
void write_residual_history(const SolveReport &report, std::ostream &out);

//
// Full (non-restarted) GMRES with right preconditioning, x0 = 0. Arnoldi uses modified
// Gram-Schmidt with a second pass when the projected norm drops by more than the
// orthogonality threshold. Convergence: ||b - A x|| <= max(abs_tol, rel_tol ||b||) on the
// true residual, which is recomputed before returning. A non-converged solve is reported
// (converged = false), never thrown. Non-finite values throw NumericalError.
//
struct GmresResult
{
  Vector x;
  SolveReport report;
};

GmresResult gmres(const LinearOperator &op, const LinearOperator *preconditioner,
                  const Vector &b, const SolverConfig &config);

// Preconditioned conjugate gradients for SPD operators, x0 = 0. Stops when
// ||r|| <= rel_tol ||b||. Used for the iterative auxiliary-space solves.
struct CgResult
{
  Vector x;
  int iterations = 0;
  double rel_residual = 0.0;
  bool converged = false;
};

CgResult conjugate_gradient(const LinearOperator &op, const LinearOperator *preconditioner,
                            const Vector &b, double rel_tol, int max_iterations);

}  // namespace maxvem

#endif  // MAXVEM_KRYLOV_HPP
