#include <optional>

#include "maxvem/direct.hpp"
#include "maxvem/error.hpp"
#include "maxvem/parallel.hpp"
#include "maxvem/preconditioner.hpp"

namespace maxvem
{

// Inverse of one auxiliary operator, either factorized or by Jacobi-preconditioned CG.
struct AuxiliarySpacePreconditioner::Subspace
{
  Subspace(const SparseMatrix &m, const AuxSpaceOptions &opt, const char *name)
    : matrix(m), options(opt)
  {
    try
    {
      if (opt.solver == AuxSpaceOptions::Solver::Direct)
      {
        direct.emplace(m, DirectSolver::Kind::Cholesky);
      }
      else
      {
        jacobi.emplace(m);
      }
    }
    catch (const Error &e)
    {
      throw SingularError(std::string(name) + " auxiliary operator is singular: " + e.what());
    }
  }

  void solve(const Vector &b, Vector &x) const
  {
    if (direct)
    {
      direct->apply(b, x);
      return;
    }
    const MatrixOperator op(matrix);
    x = conjugate_gradient(op, &*jacobi, b, options.cg_tol, options.cg_max_iterations).x;
  }

  const SparseMatrix &matrix;
  AuxSpaceOptions options;
  std::optional<DirectSolver> direct;
  std::optional<JacobiPreconditioner> jacobi;
};

AuxiliarySpacePreconditioner::AuxiliarySpacePreconditioner(const SparseMatrix &op,
                                                           SparseMatrix grad,
                                                           SparseMatrix nodal,
                                                           const AuxSpaceOptions &options)
  : op_(op), grad_(std::move(grad)), nodal_(std::move(nodal)), options_(options)
{
  if (op.rows() != op.cols() || grad_.rows() != op.rows() || nodal_.rows() != op.rows())
  {
    throw InvalidArgument("auxiliary-space preconditioner: inconsistent operator shapes");
  }
  if (options.smoothing_sweeps < 0)
  {
    throw InvalidArgument("smoothing sweeps must be non-negative");
  }
  if (op.rows() == 0)
  {
    return;
  }
  inv_diag_ = JacobiPreconditioner(op).inverse_diagonal();
  grad_t_ = grad_.transpose();
  nodal_t_ = nodal_.transpose();
  if (grad_.cols() > 0)
  {
    grad_lap_ = grad_t_ * (op * grad_);
    grad_solver_ = std::make_unique<Subspace>(grad_lap_, options_, "gradient");
  }
  if (nodal_.cols() > 0)
  {
    nodal_lap_ = nodal_t_ * (op * nodal_);
    nodal_solver_ = std::make_unique<Subspace>(nodal_lap_, options_, "nodal vector");
  }
}

AuxiliarySpacePreconditioner::~AuxiliarySpacePreconditioner() = default;

void AuxiliarySpacePreconditioner::apply(const Vector &r, Vector &z) const
{
  const int n = size();
  if (r.size() != n)
  {
    throw InvalidArgument("auxiliary-space preconditioner: vector size mismatch");
  }
  z = Vector::Zero(n);
  if (n == 0)
  {
    return;
  }
  // Jacobi sweeps on S z = r from z = 0.
  Vector residual = r, correction;
  for (int sweep = 0; sweep < options_.smoothing_sweeps; sweep++)
  {
    if (sweep > 0)
    {
      op_.multiply(z, residual);
      axpby(1.0, r, -1.0, residual);
    }
    multiply_elementwise(inv_diag_, residual, correction);
    axpy(1.0, correction, z);
  }

  Vector coarse_rhs, coarse_sol;
  if (grad_solver_)
  {
    grad_t_.multiply(r, coarse_rhs);
    grad_solver_->solve(coarse_rhs, coarse_sol);
    grad_.multiply_add(coarse_sol, z);
  }
  if (nodal_solver_)
  {
    nodal_t_.multiply(r, coarse_rhs);
    nodal_solver_->solve(coarse_rhs, coarse_sol);
    nodal_.multiply_add(coarse_sol, z);
  }
}

SparseMatrix restrict_gradient(const IncidenceOperators &inc, const DofPartition &dofs)
{
  return inc.grad.submatrix(dofs.free_edges, dofs.free_vertices);
}

SparseMatrix restrict_nodal(const IncidenceOperators &inc, const DofPartition &dofs)
{
  std::vector<int> cols;
  cols.reserve(3 * dofs.free_vertices.size());
  for (int v : dofs.free_vertices)
  {
    for (int k = 0; k < 3; k++)
    {
      cols.push_back(3 * v + k);
    }
  }
  return inc.nodal.submatrix(dofs.free_edges, cols);
}

}  // namespace maxvem
