#include "maxvem/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "maxvem/error.hpp"

namespace maxvem
{

namespace
{

constexpr int kParallelRows = 2048;

void check_vector(const char *what, Eigen::Index got, int expected)
{
  if (got != expected)
  {
    throw InvalidArgument(std::string(what) + ": vector size " + std::to_string(got) +
                          " does not match matrix dimension " + std::to_string(expected));
  }
}

}  // namespace

SparseMatrix::SparseMatrix(int rows, int cols)
  : rows_(rows), cols_(cols), offsets_(std::size_t(rows) + 1, 0)
{
  if (rows < 0 || cols < 0)
  {
    throw InvalidArgument("negative matrix dimension");
  }
}

SparseMatrix SparseMatrix::from_triplets(int rows, int cols, std::vector<Triplet> triplets)
{
  SparseMatrix m(rows, cols);
  for (const auto &t : triplets)
  {
    if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
    {
      throw InvalidArgument("triplet (" + std::to_string(t.row) + ", " + std::to_string(t.col) +
                            ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
    }
  }
  std::stable_sort(triplets.begin(), triplets.end(), [](const Triplet &a, const Triplet &b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  m.cols_idx_.reserve(triplets.size());
  m.values_.reserve(triplets.size());
  std::size_t i = 0;
  for (int r = 0; r < rows; r++)
  {
    while (i < triplets.size() && triplets[i].row == r)
    {
      const int c = triplets[i].col;
      double sum = 0.0;
      while (i < triplets.size() && triplets[i].row == r && triplets[i].col == c)
      {
        sum += triplets[i].value;
        i++;
      }
      m.cols_idx_.push_back(c);
      m.values_.push_back(sum);
    }
    m.offsets_[r + 1] = static_cast<int>(m.cols_idx_.size());
  }
  return m;
}

SparseMatrix SparseMatrix::identity(int n)
{
  return diagonal(Vector::Ones(n));
}

SparseMatrix SparseMatrix::diagonal(const Vector &d)
{
  const int n = static_cast<int>(d.size());
  SparseMatrix m(n, n);
  m.cols_idx_.resize(n);
  m.values_.resize(n);
  for (int i = 0; i < n; i++)
  {
    m.offsets_[i + 1] = i + 1;
    m.cols_idx_[i] = i;
    m.values_[i] = d[i];
  }
  return m;
}

SparseMatrix SparseMatrix::from_dense(const Eigen::MatrixXd &d, double drop)
{
  std::vector<Triplet> t;
  for (int i = 0; i < d.rows(); i++)
  {
    for (int j = 0; j < d.cols(); j++)
    {
      if (std::abs(d(i, j)) > drop)
      {
        t.push_back({i, j, d(i, j)});
      }
    }
  }
  return from_triplets(static_cast<int>(d.rows()), static_cast<int>(d.cols()), std::move(t));
}

double SparseMatrix::coeff(int row, int col) const
{
  const auto begin = cols_idx_.begin() + offsets_[row];
  const auto end = cols_idx_.begin() + offsets_[row + 1];
  const auto it = std::lower_bound(begin, end, col);
  return (it != end && *it == col) ? values_[it - cols_idx_.begin()] : 0.0;
}

void SparseMatrix::multiply(const Vector &x, Vector &y) const
{
  check_vector("multiply", x.size(), cols_);
  y.resize(rows_);
#pragma omp parallel for schedule(static) if (rows_ >= kParallelRows)
  for (int r = 0; r < rows_; r++)
  {
    double s = 0.0;
    for (int k = offsets_[r]; k < offsets_[r + 1]; k++)
    {
      s += values_[k] * x[cols_idx_[k]];
    }
    y[r] = s;
  }
}

void SparseMatrix::multiply_add(const Vector &x, Vector &y, double alpha) const
{
  check_vector("multiply_add", x.size(), cols_);
  check_vector("multiply_add", y.size(), rows_);
#pragma omp parallel for schedule(static) if (rows_ >= kParallelRows)
  for (int r = 0; r < rows_; r++)
  {
    double s = 0.0;
    for (int k = offsets_[r]; k < offsets_[r + 1]; k++)
    {
      s += values_[k] * x[cols_idx_[k]];
    }
    y[r] += alpha * s;
  }
}

void SparseMatrix::multiply_transpose(const Vector &x, Vector &y) const
{
  check_vector("multiply_transpose", x.size(), rows_);
  y = Vector::Zero(cols_);
  for (int r = 0; r < rows_; r++)
  {
    for (int k = offsets_[r]; k < offsets_[r + 1]; k++)
    {
      y[cols_idx_[k]] += values_[k] * x[r];
    }
  }
}

Vector SparseMatrix::operator*(const Vector &x) const
{
  Vector y;
  multiply(x, y);
  return y;
}

SparseMatrix SparseMatrix::transpose() const
{
  SparseMatrix t(cols_, rows_);
  std::vector<int> count(std::size_t(cols_) + 1, 0);
  for (int c : cols_idx_)
  {
    count[c + 1]++;
  }
  for (int c = 0; c < cols_; c++)
  {
    count[c + 1] += count[c];
  }
  t.offsets_ = count;
  t.cols_idx_.resize(nnz());
  t.values_.resize(nnz());
  for (int r = 0; r < rows_; r++)
  {
    for (int k = offsets_[r]; k < offsets_[r + 1]; k++)
    {
      const int dst = count[cols_idx_[k]]++;
      t.cols_idx_[dst] = r;
      t.values_[dst] = values_[k];
    }
  }
  return t;
}

SparseMatrix SparseMatrix::scaled(double s) const
{
  SparseMatrix m(*this);
  for (double &v : m.values_)
  {
    v *= s;
  }
  return m;
}

Vector SparseMatrix::diagonal() const
{
  const int n = std::min(rows_, cols_);
  Vector d(n);
  for (int i = 0; i < n; i++)
  {
    d[i] = coeff(i, i);
  }
  return d;
}

SparseMatrix SparseMatrix::submatrix(const std::vector<int> &row_ids,
                                     const std::vector<int> &col_ids) const
{
  std::vector<int> col_map(cols_, -1);
  for (std::size_t j = 0; j < col_ids.size(); j++)
  {
    col_map.at(col_ids[j]) = static_cast<int>(j);
  }
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < row_ids.size(); i++)
  {
    const int r = row_ids[i];
    for (int k = offsets_.at(r); k < offsets_[r + 1]; k++)
    {
      if (const int c = col_map[cols_idx_[k]]; c >= 0)
      {
        t.push_back({static_cast<int>(i), c, values_[k]});
      }
    }
  }
  return from_triplets(static_cast<int>(row_ids.size()), static_cast<int>(col_ids.size()),
                       std::move(t));
}

Eigen::MatrixXd SparseMatrix::to_dense() const
{
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(rows_, cols_);
  for (int r = 0; r < rows_; r++)
  {
    for (int k = offsets_[r]; k < offsets_[r + 1]; k++)
    {
      d(r, cols_idx_[k]) = values_[k];
    }
  }
  return d;
}

Eigen::SparseMatrix<double> SparseMatrix::to_eigen() const
{
  std::vector<Eigen::Triplet<double>> t;
  t.reserve(nnz());
  for (int r = 0; r < rows_; r++)
  {
    for (int k = offsets_[r]; k < offsets_[r + 1]; k++)
    {
      t.emplace_back(r, cols_idx_[k], values_[k]);
    }
  }
  Eigen::SparseMatrix<double> m(rows_, cols_);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

double SparseMatrix::max_abs() const
{
  double m = 0.0;
  for (double v : values_)
  {
    m = std::max(m, std::abs(v));
  }
  return m;
}

bool SparseMatrix::is_symmetric(double rel_tol) const
{
  if (rows_ != cols_)
  {
    return false;
  }
  const double scale = max_abs();
  for (int r = 0; r < rows_; r++)
  {
    for (int k = offsets_[r]; k < offsets_[r + 1]; k++)
    {
      if (std::abs(values_[k] - coeff(cols_idx_[k], r)) > rel_tol * scale)
      {
        return false;
      }
    }
  }
  return true;
}

void SparseMatrix::write_matrix_market(std::ostream &out) const
{
  out << "%%MatrixMarket matrix coordinate real general\n";
  out << rows_ << ' ' << cols_ << ' ' << nnz() << '\n';
  out << std::setprecision(17);
  for (int r = 0; r < rows_; r++)
  {
    for (int k = offsets_[r]; k < offsets_[r + 1]; k++)
    {
      out << r + 1 << ' ' << cols_idx_[k] + 1 << ' ' << values_[k] << '\n';
    }
  }
}

SparseMatrix operator*(const SparseMatrix &a, const SparseMatrix &b)
{
  if (a.cols() != b.rows())
  {
    throw InvalidArgument("sparse product dimension mismatch");
  }
  const auto ao = a.row_offsets(), ac = a.col_indices();
  const auto av = a.values();
  const auto bo = b.row_offsets(), bc = b.col_indices();
  const auto bv = b.values();

  std::vector<Triplet> t;
  std::vector<double> acc(b.cols(), 0.0);
  std::vector<int> marker(b.cols(), -1);
  std::vector<int> pattern;
  for (int r = 0; r < a.rows(); r++)
  {
    pattern.clear();
    for (int k = ao[r]; k < ao[r + 1]; k++)
    {
      const int mid = ac[k];
      for (int l = bo[mid]; l < bo[mid + 1]; l++)
      {
        const int c = bc[l];
        if (marker[c] != r)
        {
          marker[c] = r;
          acc[c] = 0.0;
          pattern.push_back(c);
        }
        acc[c] += av[k] * bv[l];
      }
    }
    std::sort(pattern.begin(), pattern.end());
    for (int c : pattern)
    {
      t.push_back({r, c, acc[c]});
    }
  }
  return SparseMatrix::from_triplets(a.rows(), b.cols(), std::move(t));
}

SparseMatrix add(double alpha, const SparseMatrix &a, double beta, const SparseMatrix &b)
{
  if (a.rows() != b.rows() || a.cols() != b.cols())
  {
    throw InvalidArgument("sparse sum dimension mismatch");
  }
  std::vector<Triplet> t;
  t.reserve(a.nnz() + b.nnz());
  for (const auto *m : {&a, &b})
  {
    const double s = m == &a ? alpha : beta;
    const auto o = m->row_offsets(), c = m->col_indices();
    const auto v = m->values();
    for (int r = 0; r < m->rows(); r++)
    {
      for (int k = o[r]; k < o[r + 1]; k++)
      {
        t.push_back({r, c[k], s * v[k]});
      }
    }
  }
  return SparseMatrix::from_triplets(a.rows(), a.cols(), std::move(t));
}

SparseMatrix block_matrix(const SparseMatrix &tl, const SparseMatrix &tr, const SparseMatrix &bl,
                          const SparseMatrix &br)
{
  if (tl.rows() != tr.rows() || bl.rows() != br.rows() || tl.cols() != bl.cols() ||
      tr.cols() != br.cols())
  {
    throw InvalidArgument("block_matrix: inconsistent block dimensions");
  }
  std::vector<Triplet> t;
  t.reserve(tl.nnz() + tr.nnz() + bl.nnz() + br.nnz());
  auto emit = [&](const SparseMatrix &m, int r0, int c0) {
    const auto o = m.row_offsets(), c = m.col_indices();
    const auto v = m.values();
    for (int r = 0; r < m.rows(); r++)
    {
      for (int k = o[r]; k < o[r + 1]; k++)
      {
        t.push_back({r0 + r, c0 + c[k], v[k]});
      }
    }
  };
  emit(tl, 0, 0);
  emit(tr, 0, tl.cols());
  emit(bl, tl.rows(), 0);
  emit(br, tl.rows(), tl.cols());
  return SparseMatrix::from_triplets(tl.rows() + bl.rows(), tl.cols() + tr.cols(), std::move(t));
}

}  // namespace maxvem
