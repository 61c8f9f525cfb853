#ifndef MAXVEM_SPECTRAL_HPP
#define MAXVEM_SPECTRAL_HPP

#include <complex>
#include <vector>

#include "maxvem/operator.hpp"
#include "maxvem/sparse.hpp"

namespace maxvem
{

inline constexpr int kMaxSpectrumSize = 2000;
inline constexpr int kMaxConditionSize = 5000;

// Dense materialization of an operator, one column per unit vector.
Eigen::MatrixXd materialize(const LinearOperator &op);

// All eigenvalues of the operator, sorted by real part then imaginary part. Throws
// SizeError when op.size() exceeds max_size.
std::vector<std::complex<double>> spectrum_estimate(const LinearOperator &op,
                                                    int max_size = kMaxSpectrumSize);

// Number of clusters among the eigenvalues; two values share a cluster when they are
// within tol * max(1, |lambda|) of each other (single linkage).
int count_distinct(const std::vector<std::complex<double>> &values, double tol = 1e-8);

// Ratio of the extreme singular values. Throws SizeError above max_size rows.
double condition_estimate(const SparseMatrix &m, int max_size = kMaxConditionSize);
double condition_estimate(const Eigen::MatrixXd &m);

}  // namespace maxvem

#endif  // MAXVEM_SPECTRAL_HPP
