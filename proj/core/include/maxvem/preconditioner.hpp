#ifndef MAXVEM_PRECONDITIONER_HPP
#define MAXVEM_PRECONDITIONER_HPP

#include <memory>

#include "maxvem/assembly.hpp"
#include "maxvem/krylov.hpp"
#include "maxvem/operator.hpp"
#include "maxvem/sparse.hpp"
#include "maxvem/vem.hpp"

namespace maxvem
{

// Multiplies by the inverse diagonal. Throws InvalidArgument on non-positive diagonals.
class JacobiPreconditioner : public LinearOperator
{
public:
  explicit JacobiPreconditioner(const SparseMatrix &m);
  int size() const override { return static_cast<int>(inv_diag_.size()); }
  void apply(const Vector &x, Vector &y) const override;
  const Vector &inverse_diagonal() const { return inv_diag_; }

private:
  Vector inv_diag_;
};

struct AuxSpaceOptions
{
  enum class Solver
  {
    Direct,
    CG,
  };

  int smoothing_sweeps = 1;
  Solver solver = Solver::Direct;
  double cg_tol = 1e-8;
  int cg_max_iterations = 2000;
};

//
// Additive Hiptmair-Xu auxiliary-space preconditioner for the edge operator S = a M + b K:
//
//   z = Smooth(r) + G L_g^-1 G^T r + Pi L_v^-1 Pi^T r,
//
// Smooth is k sweeps of pointwise Jacobi on S started from zero, L_g = G^T S G lives on the
// free vertices (gradient subspace), L_v = Pi^T S Pi on the free nodal vector fields.
// grad and nodal must already be restricted to free edges and free vertices.
//
class AuxiliarySpacePreconditioner : public LinearOperator
{
public:
  AuxiliarySpacePreconditioner(const SparseMatrix &op, SparseMatrix grad, SparseMatrix nodal,
                               const AuxSpaceOptions &options = {});
  ~AuxiliarySpacePreconditioner() override;

  int size() const override { return op_.rows(); }
  void apply(const Vector &r, Vector &z) const override;

  const SparseMatrix &gradient_operator() const { return grad_lap_; }
  const SparseMatrix &nodal_operator() const { return nodal_lap_; }

private:
  struct Subspace;

  const SparseMatrix &op_;
  SparseMatrix grad_, grad_t_, nodal_, nodal_t_;
  SparseMatrix grad_lap_, nodal_lap_;
  Vector inv_diag_;
  AuxSpaceOptions options_;
  std::unique_ptr<Subspace> grad_solver_, nodal_solver_;
};

// GRAD restricted to free edges x free vertices.
SparseMatrix restrict_gradient(const IncidenceOperators &inc, const DofPartition &dofs);
// PI_nodal restricted to free edges x 3 * free vertices.
SparseMatrix restrict_nodal(const IncidenceOperators &inc, const DofPartition &dofs);

//
// Block lower-triangular preconditioner for the (B, E) system:
//   z_B = C^-1 r_B,  z_E = S^-1 (r_E - B1 z_B),
// with C^-1 and S^-1 replaced by the chosen sub-applicators.
//
class BlockTriangularPreconditioner : public LinearOperator
{
public:
  BlockTriangularPreconditioner(std::unique_ptr<LinearOperator> c_inverse,
                                std::unique_ptr<LinearOperator> s_inverse,
                                const SparseMatrix &b1);

  int size() const override { return nb_ + ne_; }
  void apply(const Vector &r, Vector &z) const override;

  const LinearOperator &c_inverse() const { return *c_inv_; }
  const LinearOperator &s_inverse() const { return *s_inv_; }

private:
  std::unique_ptr<LinearOperator> c_inv_, s_inv_;
  const SparseMatrix &b1_;
  int nb_, ne_;
};

// Builds the preconditioner for one of the four sub-inverse combinations. The returned
// object references sys; keep sys alive.
std::unique_ptr<BlockTriangularPreconditioner>
build_preconditioner(const BlockSystem &sys, const IncidenceOperators &incidence,
                     PreconditionerVariant variant, const AuxSpaceOptions &options = {});

// Same, with the S_C approximation built from the given edge operator instead of sys.schur
// (used to stabilize the Schur operator independently of the system). schur must outlive
// the result.
std::unique_ptr<BlockTriangularPreconditioner>
build_preconditioner(const BlockSystem &sys, const SparseMatrix &schur,
                     const IncidenceOperators &incidence, PreconditionerVariant variant,
                     const AuxSpaceOptions &options = {});

}  // namespace maxvem

#endif  // MAXVEM_PRECONDITIONER_HPP
