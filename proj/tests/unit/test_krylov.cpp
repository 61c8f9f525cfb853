#include <limits>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace maxvem;

namespace
{

SparseMatrix random_spd(int n, std::mt19937 &rng)
{
  Eigen::MatrixXd a = Eigen::MatrixXd::Random(n, n);
  (void)rng;
  return SparseMatrix::from_dense(a.transpose() * a + n * Eigen::MatrixXd::Identity(n, n));
}

SparseMatrix nonsymmetric(int n)
{
  std::vector<Triplet> t;
  for (int i = 0; i < n; i++)
  {
    t.push_back({i, i, 4.0 + 0.01 * i});
    if (i + 1 < n)
    {
      t.push_back({i, i + 1, -1.5});
      t.push_back({i + 1, i, -0.5});
    }
  }
  return SparseMatrix::from_triplets(n, n, t);
}

// Loose inner CG solve: depends nonlinearly on its input.
class InexactInverse : public LinearOperator
{
public:
  explicit InexactInverse(const SparseMatrix &a) : a_(a), jacobi_(a) {}
  int size() const override { return a_.rows(); }
  void apply(const Vector &x, Vector &y) const override
  {
    y = conjugate_gradient(MatrixOperator(a_), &jacobi_, x, 1e-3, 1000).x;
  }

private:
  const SparseMatrix &a_;
  JacobiPreconditioner jacobi_;
};

}  // namespace

TEST(Gmres, IdentityConvergesInOneIteration)
{
  const auto id = SparseMatrix::identity(25);
  std::mt19937 rng(1);
  const Vector b = test::random_vector(25, rng);
  const auto r = gmres(MatrixOperator(id), nullptr, b, {});
  EXPECT_TRUE(r.report.converged);
  EXPECT_EQ(r.report.iterations, 1);
  EXPECT_LT((r.x - b).norm(), 1e-14);
}

TEST(Gmres, ExactPreconditionerConvergesInOneIteration)
{
  const auto a = nonsymmetric(40);
  const DirectSolver inv(a);
  std::mt19937 rng(2);
  const Vector b = test::random_vector(40, rng);
  const auto r = gmres(MatrixOperator(a), &inv, b, {});
  EXPECT_EQ(r.report.iterations, 1);
}

TEST(Gmres, InexactPreconditionerReachesTrueResidual)
{
  const int n = 12;
  std::vector<Triplet> t;
  for (int i = 0; i < n * n; i++)
  {
    t.push_back({i, i, 4.0});
    if (i % n + 1 < n)
    {
      t.push_back({i, i + 1, -1.0});
      t.push_back({i + 1, i, -1.0});
    }
    if (i + n < n * n)
    {
      t.push_back({i, i + n, -1.0});
      t.push_back({i + n, i, -1.0});
    }
  }
  const auto a = SparseMatrix::from_triplets(n * n, n * n, t);
  const InexactInverse inv(a);
  std::mt19937 rng(9);
  const Vector b = test::random_vector(n * n, rng);
  SolverConfig c;
  c.rel_tol = 1e-10;
  c.abs_tol = 1e-300;
  const auto r = gmres(MatrixOperator(a), &inv, b, c);
  ASSERT_TRUE(r.report.converged);
  EXPECT_LT(r.report.iterations, 40);
  EXPECT_LE((b - a.to_dense() * r.x).norm(), 1e-10 * b.norm() * (1 + 1e-6));
}

TEST(Gmres, SmallSpdSystemMatchesDenseSolve)
{
  std::srand(3);
  std::mt19937 rng(3);
  const auto a = random_spd(10, rng);
  const Vector b = test::random_vector(10, rng);
  SolverConfig cfg;
  cfg.rel_tol = 1e-12;
  cfg.abs_tol = 1e-300;
  const auto r = gmres(MatrixOperator(a), nullptr, b, cfg);
  EXPECT_TRUE(r.report.converged);
  EXPECT_LE(r.report.iterations, 10);
  const Vector ref = a.to_dense().llt().solve(b);
  EXPECT_LT((r.x - ref).norm(), 1e-10 * ref.norm());
}

TEST(Gmres, HistoryIsMonotoneAndEndsAtTrueResidual)
{
  const auto a = nonsymmetric(200);
  std::mt19937 rng(4);
  const Vector b = test::random_vector(200, rng);
  SolverConfig cfg;
  cfg.rel_tol = 1e-10;
  const JacobiPreconditioner jac(a);
  const auto r = gmres(MatrixOperator(a), &jac, b, cfg);
  ASSERT_TRUE(r.report.converged);
  ASSERT_EQ(int(r.report.history.size()), r.report.iterations + 1);
  EXPECT_NEAR(r.report.history.front(), b.norm(), 1e-12 * b.norm());
  for (std::size_t i = 1; i < r.report.history.size(); i++)
  {
    EXPECT_LE(r.report.history[i], r.report.history[i - 1] * (1 + 1e-14));
  }
  const double true_res = (b - a * r.x).norm();
  EXPECT_NEAR(r.report.abs_residual, true_res, 1e-13 * b.norm());
  EXPECT_NEAR(r.report.history.back(), true_res, 1e-8 * b.norm());
  EXPECT_LE(r.report.abs_residual, 1e-10 * b.norm());
  EXPECT_NEAR(r.report.rel_residual, r.report.abs_residual / b.norm(), 1e-15);
  EXPECT_DOUBLE_EQ(r.report.rhs_norm, b.norm());
}

TEST(Gmres, ZeroRightHandSide)
{
  const auto a = nonsymmetric(10);
  const auto r = gmres(MatrixOperator(a), nullptr, Vector::Zero(10), {});
  EXPECT_TRUE(r.report.converged);
  EXPECT_EQ(r.report.iterations, 0);
  EXPECT_EQ(r.x.norm(), 0.0);
}

TEST(Gmres, IterationCapReportsNonConvergence)
{
  const auto a = nonsymmetric(100);
  std::mt19937 rng(5);
  const Vector b = test::random_vector(100, rng);
  SolverConfig cfg;
  cfg.max_iterations = 3;
  cfg.rel_tol = 1e-14;
  const auto r = gmres(MatrixOperator(a), nullptr, b, cfg);
  EXPECT_FALSE(r.report.converged);
  EXPECT_EQ(r.report.iterations, 3);
}

TEST(Gmres, NonFiniteInputThrows)
{
  const auto a = nonsymmetric(10);
  Vector b = Vector::Ones(10);
  b[3] = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(gmres(MatrixOperator(a), nullptr, b, {}), NumericalError);
}

TEST(Gmres, SizeMismatchThrows)
{
  const auto a = nonsymmetric(10);
  EXPECT_THROW(gmres(MatrixOperator(a), nullptr, Vector::Ones(9), {}), InvalidArgument);
}

TEST(Gmres, ResidualHistoryCsv)
{
  const auto a = nonsymmetric(30);
  const auto r = gmres(MatrixOperator(a), nullptr, Vector::Ones(30), {});
  std::ostringstream os;
  write_residual_history(r.report, os);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "iteration,abs_residual,rel_residual");
  int rows = 0;
  while (std::getline(is, line))
  {
    rows++;
  }
  EXPECT_EQ(rows, r.report.iterations + 1);
}

TEST(SolverConfig, Validation)
{
  SolverConfig c;
  EXPECT_NO_THROW(c.validate());
  c.max_iterations = 0;
  EXPECT_THROW(c.validate(), InvalidArgument);
  c = {};
  c.rel_tol = -1.0;
  EXPECT_THROW(c.validate(), InvalidArgument);
}

TEST(Variant, NamesRoundTrip)
{
  for (auto v : {PreconditionerVariant::ExactExact, PreconditionerVariant::JacobiExact,
                 PreconditionerVariant::ExactAMS, PreconditionerVariant::JacobiAMS})
  {
    EXPECT_EQ(parse_variant(to_string(v)), v);
  }
  EXPECT_EQ(parse_variant("Jacobi_AMS"), PreconditionerVariant::JacobiAMS);
  EXPECT_THROW(parse_variant("ilu"), InvalidArgument);
}

TEST(ConjugateGradient, SolvesSpdSystem)
{
  std::srand(7);
  std::mt19937 rng(7);
  const auto a = random_spd(30, rng);
  const Vector b = test::random_vector(30, rng);
  const JacobiPreconditioner jac(a);
  const auto r = conjugate_gradient(MatrixOperator(a), &jac, b, 1e-12, 200);
  EXPECT_TRUE(r.converged);
  EXPECT_LT((a * r.x - b).norm(), 1e-11 * b.norm());
  const auto plain = conjugate_gradient(MatrixOperator(a), nullptr, b, 1e-12, 200);
  EXPECT_TRUE(plain.converged);
}
