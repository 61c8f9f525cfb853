#include "maxvem/spectral.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "maxvem/error.hpp"

namespace maxvem
{

Eigen::MatrixXd materialize(const LinearOperator &op)
{
  const int n = op.size();
  Eigen::MatrixXd m(n, n);
  Vector e = Vector::Zero(n), col;
  for (int j = 0; j < n; j++)
  {
    e[j] = 1.0;
    op.apply(e, col);
    m.col(j) = col;
    e[j] = 0.0;
  }
  return m;
}

std::vector<std::complex<double>> spectrum_estimate(const LinearOperator &op, int max_size)
{
  if (op.size() > max_size)
  {
    throw SizeError("spectrum: operator of size " + std::to_string(op.size()) +
                    " exceeds the dense limit " + std::to_string(max_size));
  }
  std::vector<std::complex<double>> out;
  if (op.size() == 0)
  {
    return out;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(materialize(op), false);
  if (solver.info() != Eigen::Success)
  {
    throw NumericalError("spectrum: eigenvalue iteration did not converge");
  }
  const auto &ev = solver.eigenvalues();
  out.assign(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

int count_distinct(const std::vector<std::complex<double>> &values, double tol)
{
  const std::size_t n = values.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t i) {
    while (parent[i] != i)
    {
      i = parent[i] = parent[parent[i]];
    }
    return i;
  };
  for (std::size_t i = 0; i < n; i++)
  {
    for (std::size_t j = i + 1; j < n; j++)
    {
      const double scale = std::max({1.0, std::abs(values[i]), std::abs(values[j])});
      if (std::abs(values[i] - values[j]) <= tol * scale)
      {
        parent[root(i)] = root(j);
      }
    }
  }
  int count = 0;
  for (std::size_t i = 0; i < n; i++)
  {
    count += root(i) == i;
  }
  return count;
}

double condition_estimate(const Eigen::MatrixXd &m)
{
  if (m.rows() == 0)
  {
    return 1.0;
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  const auto &s = svd.singularValues();
  const double smin = s[s.size() - 1];
  return smin > 0.0 ? s[0] / smin : std::numeric_limits<double>::infinity();
}

double condition_estimate(const SparseMatrix &m, int max_size)
{
  if (m.rows() > max_size || m.cols() > max_size)
  {
    throw SizeError("condition: matrix of size " + std::to_string(m.rows()) +
                    " exceeds the dense limit " + std::to_string(max_size));
  }
  return condition_estimate(m.to_dense());
}

}  // namespace maxvem
