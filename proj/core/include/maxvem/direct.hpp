#ifndef MAXVEM_DIRECT_HPP
#define MAXVEM_DIRECT_HPP

#include <memory>

#include "maxvem/operator.hpp"
#include "maxvem/sparse.hpp"

namespace maxvem
{

//
// Sparse direct factorization used as an exact inverse. Cholesky for symmetric positive
// definite matrices, LU otherwise; Auto tries Cholesky on symmetric input and falls back
// to LU. Throws SingularError when the factorization fails.
//
class DirectSolver : public LinearOperator
{
public:
  enum class Kind
  {
    Auto,
    Cholesky,
    LU,
  };

  explicit DirectSolver(const SparseMatrix &m, Kind kind = Kind::Auto);
  ~DirectSolver() override;
  DirectSolver(DirectSolver &&) noexcept;
  DirectSolver &operator=(DirectSolver &&) noexcept;

  int size() const override { return n_; }
  void apply(const Vector &b, Vector &x) const override;
  Kind kind() const { return kind_; }

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  int n_ = 0;
  Kind kind_ = Kind::Auto;
};

}  // namespace maxvem

#endif  // MAXVEM_DIRECT_HPP
