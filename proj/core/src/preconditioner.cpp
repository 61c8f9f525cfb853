#include "maxvem/preconditioner.hpp"

#include "maxvem/direct.hpp"
#include "maxvem/error.hpp"
#include "maxvem/parallel.hpp"

namespace maxvem
{

JacobiPreconditioner::JacobiPreconditioner(const SparseMatrix &m)
{
  if (m.rows() != m.cols())
  {
    throw InvalidArgument("Jacobi preconditioner needs a square matrix");
  }
  const Vector d = m.diagonal();
  inv_diag_.resize(d.size());
  for (Eigen::Index i = 0; i < d.size(); i++)
  {
    if (!(d[i] > 0.0))
    {
      throw InvalidArgument("Jacobi preconditioner: diagonal entry " + std::to_string(i) +
                            " is not positive");
    }
    inv_diag_[i] = 1.0 / d[i];
  }
}

void JacobiPreconditioner::apply(const Vector &x, Vector &y) const
{
  multiply_elementwise(inv_diag_, x, y);
}

BlockTriangularPreconditioner::BlockTriangularPreconditioner(
  std::unique_ptr<LinearOperator> c_inverse, std::unique_ptr<LinearOperator> s_inverse,
  const SparseMatrix &b1)
  : c_inv_(std::move(c_inverse)), s_inv_(std::move(s_inverse)), b1_(b1), nb_(c_inv_->size()),
    ne_(s_inv_->size())
{
  if (b1.rows() != ne_ || b1.cols() != nb_)
  {
    throw InvalidArgument("block preconditioner: coupling block has the wrong shape");
  }
}

void BlockTriangularPreconditioner::apply(const Vector &r, Vector &z) const
{
  if (r.size() != size())
  {
    throw InvalidArgument("block preconditioner: vector size mismatch");
  }
  Vector zb, ze;
  c_inv_->apply(r.head(nb_), zb);
  Vector re = r.tail(ne_);
  b1_.multiply_add(zb, re, -1.0);
  s_inv_->apply(re, ze);
  z.resize(size());
  z.head(nb_) = zb;
  z.tail(ne_) = ze;
}

std::unique_ptr<BlockTriangularPreconditioner>
build_preconditioner(const BlockSystem &sys, const IncidenceOperators &incidence,
                     PreconditionerVariant variant, const AuxSpaceOptions &options)
{
  return build_preconditioner(sys, sys.schur, incidence, variant, options);
}

std::unique_ptr<BlockTriangularPreconditioner>
build_preconditioner(const BlockSystem &sys, const SparseMatrix &schur,
                     const IncidenceOperators &incidence, PreconditionerVariant variant,
                     const AuxSpaceOptions &options)
{
  if (schur.rows() != sys.num_e() || schur.cols() != sys.num_e())
  {
    throw InvalidArgument("Schur operator does not match the free edge space");
  }
  std::unique_ptr<LinearOperator> c_inv, s_inv;
  const bool exact_c = variant == PreconditionerVariant::ExactExact ||
                       variant == PreconditionerVariant::ExactAMS;
  const bool exact_s = variant == PreconditionerVariant::ExactExact ||
                       variant == PreconditionerVariant::JacobiExact;
  if (exact_c)
  {
    c_inv = std::make_unique<DirectSolver>(sys.C);
  }
  else
  {
    c_inv = std::make_unique<JacobiPreconditioner>(sys.C);
  }
  if (exact_s)
  {
    s_inv = std::make_unique<DirectSolver>(schur);
  }
  else
  {
    s_inv = std::make_unique<AuxiliarySpacePreconditioner>(
      schur, restrict_gradient(incidence, sys.dofs), restrict_nodal(incidence, sys.dofs),
      options);
  }
  return std::make_unique<BlockTriangularPreconditioner>(std::move(c_inv), std::move(s_inv),
                                                         sys.B1);
}

}  // namespace maxvem
