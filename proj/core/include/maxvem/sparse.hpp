#ifndef MAXVEM_SPARSE_HPP
#define MAXVEM_SPARSE_HPP

#include <iosfwd>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "maxvem/types.hpp"

namespace maxvem
{

struct Triplet
{
  int row;
  int col;
  double value;
};

//
// Compressed-row sparse matrix. Column indices are sorted and unique within each row.
// Matrix-vector products parallelize over rows; each row is summed sequentially, so the
// result does not depend on the thread count.
//
class SparseMatrix
{
public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols);

  // Duplicates are summed in their input order.
  static SparseMatrix from_triplets(int rows, int cols, std::vector<Triplet> triplets);
  static SparseMatrix identity(int n);
  static SparseMatrix diagonal(const Vector &d);
  static SparseMatrix from_dense(const Eigen::MatrixXd &m, double drop = 0.0);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nnz() const { return values_.size(); }

  std::span<const int> row_offsets() const { return offsets_; }
  std::span<const int> col_indices() const { return cols_idx_; }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  // Zero when the entry is not stored.
  double coeff(int row, int col) const;

  // y = A x
  void multiply(const Vector &x, Vector &y) const;
  // y += alpha A x
  void multiply_add(const Vector &x, Vector &y, double alpha = 1.0) const;
  // y = A^T x
  void multiply_transpose(const Vector &x, Vector &y) const;
  Vector operator*(const Vector &x) const;

  SparseMatrix transpose() const;
  SparseMatrix scaled(double s) const;
  Vector diagonal() const;

  // Keeps the listed rows and columns, in list order.
  SparseMatrix submatrix(const std::vector<int> &row_ids, const std::vector<int> &col_ids) const;

  Eigen::MatrixXd to_dense() const;
  Eigen::SparseMatrix<double> to_eigen() const;

  // max |a_ij - a_ji| <= rel_tol * max |a_ij|
  bool is_symmetric(double rel_tol) const;
  double max_abs() const;

  // MatrixMarket "coordinate real general", 1-based.
  void write_matrix_market(std::ostream &out) const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> offsets_ = {0};
  std::vector<int> cols_idx_;
  std::vector<double> values_;
};

SparseMatrix operator*(const SparseMatrix &a, const SparseMatrix &b);

// alpha A + beta B
SparseMatrix add(double alpha, const SparseMatrix &a, double beta, const SparseMatrix &b);

// [[top_left, top_right], [bottom_left, bottom_right]]
SparseMatrix block_matrix(const SparseMatrix &top_left, const SparseMatrix &top_right,
                          const SparseMatrix &bottom_left, const SparseMatrix &bottom_right);

}  // namespace maxvem

#endif  // MAXVEM_SPARSE_HPP
