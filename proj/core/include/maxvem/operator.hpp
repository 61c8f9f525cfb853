#ifndef MAXVEM_OPERATOR_HPP
#define MAXVEM_OPERATOR_HPP

#include "maxvem/sparse.hpp"
#include "maxvem/types.hpp"

namespace maxvem
{

// Square linear operator acting on vectors of size().
class LinearOperator
{
public:
  virtual ~LinearOperator() = default;
  virtual int size() const = 0;
  virtual void apply(const Vector &x, Vector &y) const = 0;

  Vector operator()(const Vector &x) const
  {
    Vector y;
    apply(x, y);
    return y;
  }
};

class MatrixOperator : public LinearOperator
{
public:
  explicit MatrixOperator(const SparseMatrix &m) : m_(m) {}
  int size() const override { return m_.rows(); }
  void apply(const Vector &x, Vector &y) const override { m_.multiply(x, y); }

private:
  const SparseMatrix &m_;
};

class IdentityOperator : public LinearOperator
{
public:
  explicit IdentityOperator(int n) : n_(n) {}
  int size() const override { return n_; }
  void apply(const Vector &x, Vector &y) const override { y = x; }

private:
  int n_;
};

// op2 * op1 (apply op1 first).
class ProductOperator : public LinearOperator
{
public:
  ProductOperator(const LinearOperator &first, const LinearOperator &second)
    : first_(first), second_(second)
  {
  }
  int size() const override { return first_.size(); }
  void apply(const Vector &x, Vector &y) const override
  {
    Vector t;
    first_.apply(x, t);
    second_.apply(t, y);
  }

private:
  const LinearOperator &first_;
  const LinearOperator &second_;
};

}  // namespace maxvem

#endif  // MAXVEM_OPERATOR_HPP
