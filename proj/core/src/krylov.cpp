#include "maxvem/krylov.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "maxvem/error.hpp"
#include "maxvem/parallel.hpp"

namespace maxvem
{

std::string to_string(PreconditionerVariant v)
{
  switch (v)
  {
    case PreconditionerVariant::ExactExact:
      return "exact-exact";
    case PreconditionerVariant::JacobiExact:
      return "jacobi-exact";
    case PreconditionerVariant::ExactAMS:
      return "exact-ams";
    case PreconditionerVariant::JacobiAMS:
      return "jacobi-ams";
  }
  return "unknown";
}

PreconditionerVariant parse_variant(const std::string &name)
{
  std::string key;
  for (char c : name)
  {
    key.push_back(c == '_' ? '-' : char(std::tolower(static_cast<unsigned char>(c))));
  }
  for (auto v : {PreconditionerVariant::ExactExact, PreconditionerVariant::JacobiExact,
                 PreconditionerVariant::ExactAMS, PreconditionerVariant::JacobiAMS})
  {
    if (to_string(v) == key)
    {
      return v;
    }
  }
  throw InvalidArgument("unknown preconditioner variant '" + name + "'");
}

void SolverConfig::validate() const
{
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
  {
    throw InvalidArgument("solver tolerances must be positive");
  }
  if (max_iterations < 1)
  {
    throw InvalidArgument("max_iterations must be >= 1");
  }
}

void write_residual_history(const SolveReport &report, std::ostream &out)
{
  out << "iteration,abs_residual,rel_residual\n";
  out << std::setprecision(10);
  const double scale = report.rhs_norm > 0.0 ? report.rhs_norm : 1.0;
  for (std::size_t i = 0; i < report.history.size(); i++)
  {
    out << i << ',' << report.history[i] << ',' << report.history[i] / scale << '\n';
  }
}

namespace
{

constexpr double kOrthogonalityThreshold = 1e-8;
constexpr double kBreakdown = 1e-14;

void check_finite(double v)
{
  if (!std::isfinite(v))
  {
    throw NumericalError("GMRES encountered a non-finite value");
  }
}

}  // namespace

GmresResult gmres(const LinearOperator &op, const LinearOperator *preconditioner,
                  const Vector &b, const SolverConfig &config)
{
  config.validate();
  const int n = op.size();
  if (b.size() != n)
  {
    throw InvalidArgument("gmres: right-hand side size does not match the operator");
  }
  if (preconditioner && preconditioner->size() != n)
  {
    throw InvalidArgument("gmres: preconditioner size does not match the operator");
  }
  ThreadScope threads(config.threads);
  const auto start = std::chrono::steady_clock::now();

  GmresResult result;
  auto &report = result.report;
  result.x = Vector::Zero(n);

  const double beta = norm2(b);
  check_finite(beta);
  report.rhs_norm = beta;
  const double target = std::max(config.abs_tol, config.rel_tol * beta);
  report.history.push_back(beta);

  auto finish = [&](bool converged_flag) {
    report.converged = converged_flag;
    report.solve_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  };

  if (beta <= target)
  {
    report.abs_residual = beta;
    report.rel_residual = beta > 0.0 ? 1.0 : 0.0;
    return finish(true);
  }

  const int max_it = std::min(config.max_iterations, n);
  std::vector<Vector> basis;
  basis.reserve(std::min(max_it + 1, 256));
  basis.push_back(b / beta);
  // Preconditioned directions are kept so x = Z y stays exact for inexact inner solves.
  std::vector<Vector> directions;
  directions.reserve(std::min(max_it, 256));

  Eigen::MatrixXd hess = Eigen::MatrixXd::Zero(max_it + 1, max_it);
  Vector cs = Vector::Zero(max_it), sn = Vector::Zero(max_it);
  Vector g = Vector::Zero(max_it + 1);
  g[0] = beta;

  Vector z, w, r;
  auto precondition = [&](const Vector &v, Vector &out) {
    if (preconditioner)
    {
      preconditioner->apply(v, out);
    }
    else
    {
      out = v;
    }
  };

  // Builds x = Z y from the leading k columns and returns the true residual norm.
  auto update_solution = [&](int k) {
    Vector y = g.head(k);
    hess.topLeftCorner(k, k).triangularView<Eigen::Upper>().solveInPlace(y);
    result.x.setZero();
    for (int i = 0; i < k; i++)
    {
      axpy(y[i], directions[i], result.x);
    }
    op.apply(result.x, r);
    axpby(1.0, b, -1.0, r);
    const double res = norm2(r);
    check_finite(res);
    report.abs_residual = res;
    report.rel_residual = res / beta;
    return res;
  };

  for (int j = 0; j < max_it; j++)
  {
    precondition(basis[j], z);
    directions.push_back(z);
    op.apply(z, w);
    const double w_norm = norm2(w);
    check_finite(w_norm);

    for (int i = 0; i <= j; i++)
    {
      const double h = dot(w, basis[i]);
      hess(i, j) = h;
      axpy(-h, basis[i], w);
    }
    double h_next = norm2(w);
    if (h_next > 0.0)
    {
      double loss = 0.0;
      std::vector<double> proj(j + 1);
      for (int i = 0; i <= j; i++)
      {
        proj[i] = dot(w, basis[i]);
        loss = std::max(loss, std::abs(proj[i]) / h_next);
      }
      if (loss > kOrthogonalityThreshold)
      {
        for (int i = 0; i <= j; i++)
        {
          hess(i, j) += proj[i];
          axpy(-proj[i], basis[i], w);
        }
        h_next = norm2(w);
      }
    }
    check_finite(h_next);
    hess(j + 1, j) = h_next;
    const bool breakdown = h_next <= kBreakdown * std::max(beta, w_norm);

    for (int i = 0; i < j; i++)
    {
      const double a = hess(i, j), c = hess(i + 1, j);
      hess(i, j) = cs[i] * a + sn[i] * c;
      hess(i + 1, j) = -sn[i] * a + cs[i] * c;
    }
    const double a = hess(j, j), c = hess(j + 1, j);
    const double rho = std::hypot(a, c);
    cs[j] = rho > 0.0 ? a / rho : 1.0;
    sn[j] = rho > 0.0 ? c / rho : 0.0;
    hess(j, j) = rho;
    hess(j + 1, j) = 0.0;
    g[j + 1] = -sn[j] * g[j];
    g[j] = cs[j] * g[j];

    report.iterations = j + 1;
    const double estimate = std::abs(g[j + 1]);
    report.history.push_back(estimate);

    if (estimate <= target || breakdown || j + 1 == max_it)
    {
      if (rho == 0.0)
      {
        // Singular projected system: keep the previous iterate.
        update_solution(j);
        return finish(report.abs_residual <= target);
      }
      const double res = update_solution(j + 1);
      if (res <= target)
      {
        return finish(true);
      }
      if (breakdown || j + 1 == max_it)
      {
        return finish(false);
      }
    }
    basis.push_back(w / h_next);
  }
  return finish(false);
}

CgResult conjugate_gradient(const LinearOperator &op, const LinearOperator *preconditioner,
                            const Vector &b, double rel_tol, int max_iterations)
{
  const int n = op.size();
  CgResult out;
  out.x = Vector::Zero(n);
  const double b_norm = norm2(b);
  if (b_norm == 0.0)
  {
    out.converged = true;
    return out;
  }
  Vector r = b, z, p, q;
  if (preconditioner)
  {
    preconditioner->apply(r, z);
  }
  else
  {
    z = r;
  }
  p = z;
  double rz = dot(r, z);
  for (int it = 1; it <= max_iterations; it++)
  {
    op.apply(p, q);
    const double pq = dot(p, q);
    if (!(pq > 0.0))
    {
      throw NumericalError("conjugate gradients: operator is not positive definite");
    }
    const double step = rz / pq;
    axpy(step, p, out.x);
    axpy(-step, q, r);
    out.iterations = it;
    out.rel_residual = norm2(r) / b_norm;
    if (out.rel_residual <= rel_tol)
    {
      out.converged = true;
      return out;
    }
    if (preconditioner)
    {
      preconditioner->apply(r, z);
    }
    else
    {
      z = r;
    }
    const double rz_new = dot(r, z);
    axpby(1.0, z, rz_new / rz, p);
    rz = rz_new;
  }
  return out;
}

}  // namespace maxvem
