#ifndef MAXVEM_SIMULATION_HPP
#define MAXVEM_SIMULATION_HPP

#include <functional>
#include <string>
#include <vector>

#include "maxvem/assembly.hpp"
#include "maxvem/config.hpp"
#include "maxvem/geometry.hpp"
#include "maxvem/krylov.hpp"
#include "maxvem/mesh.hpp"
#include "maxvem/preconditioner.hpp"
#include "maxvem/vem.hpp"

namespace maxvem
{

// Mesh-dependent data shared by all runs on one mesh.
struct Discretization
{
  std::string label;
  PolyMesh mesh;
  GeometricCache geometry;
  LocalOperators local;
  IncidenceOperators incidence;

  static Discretization build(PolyMesh mesh, std::string label);
  int total_dofs() const { return mesh.total_dofs(); }
};

struct RunOptions
{
  double tau = 0.05;
  double final_time = 0.5;
  int max_steps = 0;  // 0 runs to final_time

  double epsilon = 1.0;
  double sigma = 1.0;
  double mu = 1.0;
  Vec3 source{1.0, 1.0, 1.0};
  int source_steps = -1;  // the source is switched off after this many steps; -1 never

  double alpha = 1.0;
  StabilizationScope scope = StabilizationScope::System;

  SolverConfig solver;
  AuxSpaceOptions aux;

  std::string vtk_path;  // snapshot of the last step, if set
  // Called after every step with the new state.
  std::function<void(int step, const StateVector &state)> observer;
};

struct RunRecord
{
  std::string mesh;
  int total_dofs = 0;
  int free_dofs = 0;
  double tau = 0.0;
  double alpha = 1.0;
  PreconditionerVariant variant = PreconditionerVariant::JacobiAMS;
  int threads = 1;
  std::vector<SolveReport> steps;
  double setup_time = 0.0;  // assembly and preconditioner construction, seconds
  double total_time = 0.0;
  bool diverged = false;
  StateVector final_state;

  int max_iterations() const;
  double mean_solve_time() const;
};

// Number of implicit Euler steps to reach final_time, ceil(T / tau) up to rounding.
int step_count(double final_time, double tau);

// Implicit Euler from E = B = 0. A step that does not converge marks the record diverged
// and ends the run.
RunRecord run_transient(const Discretization &disc, const RunOptions &options);

// Options for one configuration of an experiment.
RunOptions run_options(const ExperimentConfig &config, double tau, double alpha,
                       PreconditionerVariant variant, int threads);

}  // namespace maxvem

#endif  // MAXVEM_SIMULATION_HPP
