#include "maxvem/bench.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "maxvem/simulation.hpp"

namespace maxvem
{

namespace
{

BenchRow run_one(const Discretization &disc, const ExperimentConfig &config, double tau,
                 double alpha, PreconditionerVariant variant, int threads)
{
  RunOptions o = run_options(config, tau, alpha, variant, threads);
  o.max_steps = config.bench_steps;
  const RunRecord rec = run_transient(disc, o);
  BenchRow row;
  row.mesh = rec.mesh;
  row.dofs = rec.total_dofs;
  row.free_dofs = rec.free_dofs;
  row.tau = tau;
  row.alpha = alpha;
  row.variant = variant;
  row.threads = rec.threads;
  row.steps = int(rec.steps.size());
  row.solve_time = rec.mean_solve_time();
  row.iterations = rec.max_iterations();
  row.diverged = rec.diverged;
  return row;
}

void report(std::ostream *progress, const BenchRow &r)
{
  if (progress)
  {
    *progress << r.mesh << " tau=" << r.tau << " alpha=" << r.alpha << ' '
              << to_string(r.variant) << " threads=" << r.threads << ": "
              << (r.diverged ? std::string("diverged") : std::to_string(r.iterations) + " its")
              << '\n';
  }
}

std::string fmt(double v)
{
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

std::string measured(const BenchRow &r, double v)
{
  return r.diverged ? "--" : fmt(v);
}

std::string measured_its(const BenchRow &r)
{
  return r.diverged ? "--" : std::to_string(r.iterations);
}

}  // namespace

std::vector<BenchRow> bench_optimality(const ExperimentConfig &config, std::ostream *progress)
{
  config.validate();
  std::vector<BenchRow> rows;
  for (int i = 0; i < config.mesh.count(); i++)
  {
    const auto disc = Discretization::build(config.mesh.build(i), config.mesh.label(i));
    for (double tau : config.timesteps)
    {
      for (auto variant : config.variants)
      {
        for (double alpha : config.solve_alphas())
        {
          rows.push_back(run_one(disc, config, tau, alpha, variant, config.threads.front()));
          report(progress, rows.back());
        }
      }
    }
  }
  return rows;
}

std::vector<BenchRow> bench_scalability(const ExperimentConfig &config, std::ostream *progress)
{
  config.validate();
  std::vector<BenchRow> rows;
  for (int i = 0; i < config.mesh.count(); i++)
  {
    const auto disc = Discretization::build(config.mesh.build(i), config.mesh.label(i));
    for (auto variant : config.variants)
    {
      const std::size_t first = rows.size();
      for (int p : config.threads)
      {
        rows.push_back(run_one(disc, config, config.scalability_tau, 1.0, variant, p));
        rows.back().threads = p;
        report(progress, rows.back());
      }
      std::size_t base = first;
      for (std::size_t k = first; k < rows.size(); k++)
      {
        if (rows[k].threads < rows[base].threads)
        {
          base = k;
        }
      }
      for (std::size_t k = first; k < rows.size(); k++)
      {
        const double tp = rows[k].solve_time;
        rows[k].speedup = tp > 0.0 ? rows[base].solve_time / tp : 1.0;
        rows[k].efficiency = rows[k].speedup * rows[base].threads / rows[k].threads;
      }
    }
  }
  return rows;
}

std::vector<BenchRow> bench_stabilization(const ExperimentConfig &config, std::ostream *progress)
{
  config.validate();
  std::vector<BenchRow> rows;
  for (int i = 0; i < config.mesh.count(); i++)
  {
    const auto disc = Discretization::build(config.mesh.build(i), config.mesh.label(i));
    for (auto variant : config.variants)
    {
      for (double alpha : config.sweep_alphas())
      {
        rows.push_back(run_one(disc, config, config.stabilization_tau, alpha, variant,
                               config.threads.front()));
        report(progress, rows.back());
      }
    }
  }
  return rows;
}

void write_optimality_csv(const std::vector<BenchRow> &rows, std::ostream &out)
{
  out << "mesh,dofs,free_dofs,tau,variant,steps,solve_time,iterations\n";
  for (const auto &r : rows)
  {
    out << r.mesh << ',' << r.dofs << ',' << r.free_dofs << ',' << fmt(r.tau) << ','
        << to_string(r.variant) << ',' << r.steps << ',' << measured(r, r.solve_time) << ','
        << measured_its(r) << '\n';
  }
}

void write_scalability_csv(const std::vector<BenchRow> &rows, std::ostream &out)
{
  out << "mesh,dofs,free_dofs,tau,variant,threads,solve_time,iterations,speedup,efficiency\n";
  for (const auto &r : rows)
  {
    out << r.mesh << ',' << r.dofs << ',' << r.free_dofs << ',' << fmt(r.tau) << ','
        << to_string(r.variant) << ',' << r.threads << ',' << measured(r, r.solve_time) << ','
        << measured_its(r) << ',' << measured(r, r.speedup) << ','
        << measured(r, r.efficiency) << '\n';
  }
}

void write_stabilization_csv(const std::vector<BenchRow> &rows, std::ostream &out)
{
  out << "mesh,dofs,free_dofs,tau,variant,alpha,solve_time,iterations\n";
  for (const auto &r : rows)
  {
    out << r.mesh << ',' << r.dofs << ',' << r.free_dofs << ',' << fmt(r.tau) << ','
        << to_string(r.variant) << ',' << fmt(r.alpha) << ',' << measured(r, r.solve_time)
        << ',' << measured_its(r) << '\n';
  }
}

}  // namespace maxvem
