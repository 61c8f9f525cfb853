#include "maxvem/direct.hpp"

#include <cmath>
#include <mutex>
#include <optional>

#include <Eigen/SparseCholesky>
#include <Eigen/SparseLU>
#ifdef MAXVEM_HAVE_SUITESPARSE
#include <Eigen/CholmodSupport>
#include <Eigen/UmfPackSupport>
#endif

#include "maxvem/error.hpp"

namespace maxvem
{

using EigenSparse = Eigen::SparseMatrix<double>;

#ifdef MAXVEM_HAVE_SUITESPARSE
using CholeskyFactor = Eigen::CholmodSupernodalLLT<EigenSparse>;
using LUFactor = Eigen::UmfPackLU<EigenSparse>;
#else
using CholeskyFactor = Eigen::SimplicialLDLT<EigenSparse>;
using LUFactor = Eigen::SparseLU<EigenSparse>;
#endif

struct DirectSolver::Impl
{
  std::optional<CholeskyFactor> cholesky;
  std::optional<LUFactor> lu;
  // UmfPackLU solves against the matrix it factorized by reference.
  EigenSparse lu_matrix;
  // The SuiteSparse wrappers keep workspace in a shared handle.
  mutable std::mutex guard;
};

namespace
{

bool try_cholesky(const EigenSparse &a, std::optional<CholeskyFactor> &out)
{
  out.emplace();
#ifdef MAXVEM_HAVE_SUITESPARSE
  // Failure is reported through SingularError; keep CHOLMOD quiet about it.
  out->cholmod().print = 0;
#endif
  out->compute(a);
  if (out->info() != Eigen::Success)
  {
    out.reset();
    return false;
  }
#ifndef MAXVEM_HAVE_SUITESPARSE
  // LDLT succeeds on indefinite matrices; require a positive pivot sequence.
  if ((out->vectorD().array() <= 0.0).any())
  {
    out.reset();
    return false;
  }
#endif
  return true;
}

}  // namespace

DirectSolver::DirectSolver(const SparseMatrix &m, Kind kind)
  : impl_(std::make_unique<Impl>()), n_(m.rows()), kind_(kind)
{
  if (m.rows() != m.cols())
  {
    throw InvalidArgument("direct factorization needs a square matrix");
  }
  if (n_ == 0)
  {
    return;
  }
  const EigenSparse a = m.to_eigen();
  if (kind == Kind::Auto)
  {
    kind_ = (m.is_symmetric(1e-12) && try_cholesky(a, impl_->cholesky)) ? Kind::Cholesky
                                                                         : Kind::LU;
  }
  else if (kind == Kind::Cholesky && !try_cholesky(a, impl_->cholesky))
  {
    throw SingularError("Cholesky factorization failed (matrix not SPD)");
  }
  if (kind_ == Kind::LU)
  {
    impl_->lu_matrix = a;
    impl_->lu.emplace();
    impl_->lu->analyzePattern(impl_->lu_matrix);
    impl_->lu->factorize(impl_->lu_matrix);
    if (impl_->lu->info() != Eigen::Success)
    {
      throw SingularError("LU factorization failed (matrix singular)");
    }
  }
}

DirectSolver::~DirectSolver() = default;
DirectSolver::DirectSolver(DirectSolver &&) noexcept = default;
DirectSolver &DirectSolver::operator=(DirectSolver &&) noexcept = default;

void DirectSolver::apply(const Vector &b, Vector &x) const
{
  if (b.size() != n_)
  {
    throw InvalidArgument("direct solve: vector size mismatch");
  }
  if (n_ == 0)
  {
    x.resize(0);
    return;
  }
  std::lock_guard lock(impl_->guard);
  if (impl_->cholesky)
  {
    x = impl_->cholesky->solve(b);
  }
  else
  {
    x = impl_->lu->solve(b);
  }
  if (!x.allFinite())
  {
    throw SingularError("direct solve produced non-finite values");
  }
}

}  // namespace maxvem
