#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace maxvem;

namespace
{

Eigen::MatrixXd random_sparse_dense(int rows, int cols, double fill, std::mt19937 &rng)
{
  std::uniform_real_distribution<double> u(-1.0, 1.0), p(0.0, 1.0);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows, cols);
  for (int i = 0; i < rows; i++)
  {
    for (int j = 0; j < cols; j++)
    {
      if (p(rng) < fill)
      {
        m(i, j) = u(rng);
      }
    }
  }
  return m;
}

}  // namespace

TEST(Sparse, FromTripletsSumsDuplicatesAndSortsColumns)
{
  const auto m = SparseMatrix::from_triplets(2, 3, {{1, 2, 1.0}, {0, 1, 2.0}, {1, 0, 3.0},
                                                    {1, 2, 4.0}, {0, 1, -1.0}});
  EXPECT_EQ(m.nnz(), 3u);
  EXPECT_EQ(m.coeff(0, 1), 1.0);
  EXPECT_EQ(m.coeff(1, 2), 5.0);
  EXPECT_EQ(m.coeff(1, 0), 3.0);
  EXPECT_EQ(m.coeff(0, 0), 0.0);
  for (int r = 0; r < m.rows(); r++)
  {
    const auto cols = m.col_indices().subspan(m.row_offsets()[r],
                                              m.row_offsets()[r + 1] - m.row_offsets()[r]);
    EXPECT_TRUE(std::is_sorted(cols.begin(), cols.end()));
    EXPECT_EQ(std::adjacent_find(cols.begin(), cols.end()), cols.end());
  }
}

TEST(Sparse, FromTripletsRejectsOutOfRange)
{
  EXPECT_THROW(SparseMatrix::from_triplets(2, 2, {{2, 0, 1.0}}), InvalidArgument);
  EXPECT_THROW(SparseMatrix::from_triplets(2, 2, {{0, -1, 1.0}}), InvalidArgument);
}

TEST(Sparse, ProductsMatchDense)
{
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; trial++)
  {
    const Eigen::MatrixXd a = random_sparse_dense(13, 9, 0.3, rng);
    const Eigen::MatrixXd b = random_sparse_dense(9, 11, 0.3, rng);
    const auto sa = SparseMatrix::from_dense(a), sb = SparseMatrix::from_dense(b);
    const Vector x = test::random_vector(9, rng);
    const Vector y = test::random_vector(13, rng);
    EXPECT_LT((sa * x - a * x).norm(), 1e-14);
    Vector t;
    sa.multiply_transpose(y, t);
    EXPECT_LT((t - a.transpose() * y).norm(), 1e-14);
    EXPECT_LT(test::rel_diff((sa * sb).to_dense(), a * b), 1e-15);
    EXPECT_EQ(sa.transpose().to_dense(), a.transpose());
    Vector z = y;
    sa.multiply_add(x, z, -2.0);
    EXPECT_LT((z - (y - 2.0 * a * x)).norm(), 1e-14);
  }
}

TEST(Sparse, AddScaleAndBlocks)
{
  std::mt19937 rng(11);
  const Eigen::MatrixXd a = random_sparse_dense(4, 4, 0.5, rng);
  const Eigen::MatrixXd b = random_sparse_dense(4, 4, 0.5, rng);
  const Eigen::MatrixXd c = random_sparse_dense(4, 3, 0.5, rng);
  const Eigen::MatrixXd d = random_sparse_dense(3, 3, 0.5, rng);
  const auto sa = SparseMatrix::from_dense(a), sb = SparseMatrix::from_dense(b);
  EXPECT_LT(test::rel_diff(add(2.0, sa, -0.5, sb).to_dense(), 2.0 * a - 0.5 * b), 1e-15);
  EXPECT_LT(test::rel_diff(sa.scaled(3.0).to_dense(), 3.0 * a), 1e-15);
  const Eigen::MatrixXd ct = c.transpose();
  const auto blk = block_matrix(sa, SparseMatrix::from_dense(c), SparseMatrix::from_dense(ct),
                                SparseMatrix::from_dense(d));
  Eigen::MatrixXd ref(7, 7);
  ref << a, c, ct, d;
  EXPECT_EQ(blk.to_dense(), ref);
  EXPECT_THROW(add(1.0, sa, 1.0, SparseMatrix::from_dense(c)), InvalidArgument);
}

TEST(Sparse, SubmatrixSelectsRowsAndColumns)
{
  Eigen::MatrixXd a(3, 4);
  a << 1, 0, 2, 0, 0, 3, 0, 4, 5, 0, 6, 7;
  const auto s = SparseMatrix::from_dense(a).submatrix({0, 2}, {2, 3});
  Eigen::MatrixXd ref(2, 2);
  ref << 2, 0, 6, 7;
  EXPECT_EQ(s.to_dense(), ref);
}

TEST(Sparse, IdentityDiagonalAndSymmetry)
{
  const auto i = SparseMatrix::identity(5);
  EXPECT_EQ(i.to_dense(), Eigen::MatrixXd::Identity(5, 5));
  const Vector d = Vector::LinSpaced(4, 1.0, 4.0);
  EXPECT_EQ(SparseMatrix::diagonal(d).diagonal(), d);
  EXPECT_TRUE(i.is_symmetric(0.0));
  Eigen::MatrixXd n(2, 2);
  n << 1, 2, 3, 4;
  EXPECT_FALSE(SparseMatrix::from_dense(n).is_symmetric(1e-12));
  EXPECT_EQ(SparseMatrix::from_dense(n).max_abs(), 4.0);
}

TEST(Sparse, MatrixMarketOutput)
{
  const auto m = SparseMatrix::from_triplets(2, 3, {{0, 0, 1.5}, {1, 2, -2.0}});
  std::ostringstream out;
  m.write_matrix_market(out);
  EXPECT_EQ(out.str(), "%%MatrixMarket matrix coordinate real general\n2 3 2\n1 1 1.5\n2 3 -2\n");
}

TEST(Sparse, ParallelSpmvIsBitIdenticalAcrossThreadCounts)
{
  const auto d = Discretization::build(generate_hex(6), "hex-6");
  const auto sys = test::unit_system(d, 0.05);
  std::mt19937 rng(3);
  const Vector x = test::random_vector(sys.size(), rng);
  Vector y1, y2;
  {
    ThreadScope one(1);
    sys.matrix.multiply(x, y1);
  }
  {
    ThreadScope two(2);
    sys.matrix.multiply(x, y2);
  }
  EXPECT_EQ(y1, y2);
}

TEST(Parallel, BlockedReductionsAreThreadIndependent)
{
  std::mt19937 rng(5);
  const Vector x = test::random_vector(100003, rng), y = test::random_vector(100003, rng);
  double d1, d2, n1, n2;
  {
    ThreadScope one(1);
    d1 = dot(x, y);
    n1 = norm2(x);
  }
  {
    ThreadScope four(4);
    d2 = dot(x, y);
    n2 = norm2(x);
  }
  EXPECT_EQ(d1, d2);
  EXPECT_EQ(n1, n2);
  EXPECT_NEAR(d1, x.dot(y), 1e-10);
  EXPECT_NEAR(n1, x.norm(), 1e-10);
}

TEST(Parallel, VectorUpdates)
{
  Vector x(3), y(3), z;
  x << 1, 2, 3;
  y << 1, 1, 1;
  axpy(2.0, x, y);
  EXPECT_EQ(y, Vector::Map(std::vector<double>{3, 5, 7}.data(), 3));
  axpby(1.0, x, -1.0, y);
  EXPECT_EQ(y, Vector::Map(std::vector<double>{-2, -3, -4}.data(), 3));
  multiply_elementwise(x, y, z);
  EXPECT_EQ(z, Vector::Map(std::vector<double>{-2, -6, -12}.data(), 3));
}
