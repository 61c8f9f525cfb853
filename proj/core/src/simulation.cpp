#include "maxvem/simulation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "maxvem/error.hpp"
#include "maxvem/parallel.hpp"
#include "maxvem/vtk.hpp"

namespace maxvem
{

namespace
{

double seconds_since(std::chrono::steady_clock::time_point start)
{
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

Discretization Discretization::build(PolyMesh mesh, std::string label)
{
  Discretization d;
  d.label = std::move(label);
  d.mesh = std::move(mesh);
  d.geometry = compute_geometry(d.mesh);
  d.local = build_local_operators(d.mesh, d.geometry);
  d.incidence = build_incidence(d.mesh, d.geometry);
  return d;
}

int RunRecord::max_iterations() const
{
  int m = 0;
  for (const auto &s : steps)
  {
    m = std::max(m, s.iterations);
  }
  return m;
}

double RunRecord::mean_solve_time() const
{
  if (steps.empty())
  {
    return 0.0;
  }
  double t = 0.0;
  for (const auto &s : steps)
  {
    t += s.solve_time;
  }
  return t / double(steps.size());
}

int step_count(double final_time, double tau)
{
  return std::max(1, int(std::ceil(final_time / tau - 1e-9)));
}

RunRecord run_transient(const Discretization &disc, const RunOptions &options)
{
  const auto start = std::chrono::steady_clock::now();
  options.solver.validate();
  ThreadScope threads(options.solver.threads);

  const int nc = disc.mesh.num_cells();
  const PhysParams params =
    PhysParams::uniform(nc, options.epsilon, options.sigma, options.mu, options.tau);
  const double system_alpha = options.scope == StabilizationScope::System ? options.alpha : 1.0;
  const BlockSystem sys =
    assemble_blocks(disc.mesh, disc.local, disc.incidence, params, system_alpha);
  SparseMatrix schur;
  if (options.alpha != system_alpha)
  {
    schur = assemble_blocks(disc.mesh, disc.local, disc.incidence, params, options.alpha).schur;
  }
  const SparseMatrix &precond_schur = options.alpha != system_alpha ? schur : sys.schur;
  const auto precond = build_preconditioner(sys, precond_schur, disc.incidence,
                                            options.solver.variant, options.aux);
  const MatrixOperator op(sys.matrix);

  const Vec3 src = options.source;
  const Vector source_dofs = restrict_to(
    interpolate_edge_field(disc.mesh, disc.geometry, [src](const Vec3 &) { return src; }),
    sys.dofs.free_edges);
  const Vector no_source = Vector::Zero(sys.num_e());

  RunRecord rec;
  rec.mesh = disc.label;
  rec.total_dofs = disc.total_dofs();
  rec.free_dofs = sys.size();
  rec.tau = options.tau;
  rec.alpha = options.alpha;
  rec.variant = options.solver.variant;
  rec.threads = num_threads();
  rec.setup_time = seconds_since(start);

  int steps = step_count(options.final_time, options.tau);
  if (options.max_steps > 0)
  {
    steps = std::min(steps, options.max_steps);
  }
  StateVector state = StateVector::zero(sys);
  for (int m = 1; m <= steps; m++)
  {
    const bool source_on = options.source_steps < 0 || m <= options.source_steps;
    const Vector rhs = assemble_rhs(sys, state, source_on ? source_dofs : no_source);
    GmresResult res = gmres(op, precond.get(), rhs, options.solver);
    rec.steps.push_back(std::move(res.report));
    if (!rec.steps.back().converged)
    {
      rec.diverged = true;
      break;
    }
    state = StateVector::split(sys, res.x);
    if (options.observer)
    {
      options.observer(m, state);
    }
  }
  if (!options.vtk_path.empty())
  {
    export_vtk(disc.mesh, disc.local, expand_from(state.E, sys.dofs.free_edges, sys.dofs.total_edges),
               expand_from(state.B, sys.dofs.free_faces, sys.dofs.total_faces), options.vtk_path);
  }
  rec.final_state = std::move(state);
  rec.total_time = seconds_since(start);
  return rec;
}

RunOptions run_options(const ExperimentConfig &config, double tau, double alpha,
                       PreconditionerVariant variant, int threads)
{
  RunOptions o;
  o.tau = tau;
  o.final_time = config.final_time;
  o.epsilon = config.epsilon;
  o.sigma = config.sigma;
  o.mu = config.mu;
  o.source = Vec3(config.source[0], config.source[1], config.source[2]);
  o.alpha = alpha;
  o.scope = config.stabilization_scope;
  o.solver = config.solver;
  o.solver.variant = variant;
  o.solver.threads = threads;
  o.aux = config.aux;
  return o;
}

}  // namespace maxvem
