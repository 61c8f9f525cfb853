#ifndef MAXVEM_CONFIG_HPP
#define MAXVEM_CONFIG_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "maxvem/krylov.hpp"
#include "maxvem/mesh.hpp"
#include "maxvem/preconditioner.hpp"

namespace maxvem
{

struct MeshSource
{
  enum class Kind
  {
    Hex,
    Tet,
    File,
  };

  Kind kind = Kind::Hex;
  std::vector<int> levels{2, 4, 8};
  std::vector<std::string> paths;
  Box box;

  // Number of meshes described (levels for generators, paths for files).
  int count() const;
  std::string label(int i) const;
  PolyMesh build(int i) const;
};

// Which operators the stabilization parameter alpha enters: the whole system (default), or
// only the sparse Schur operator the preconditioner is built from, the system keeping alpha = 1.
enum class StabilizationScope
{
  Schur,
  System,
};

//
// Declarative experiment. Every field has a default, so "{}" is a valid config.
//
struct ExperimentConfig
{
  MeshSource mesh;
  std::vector<double> timesteps{0.1, 0.05, 0.01, 0.005};
  double final_time = 0.5;
  // Time steps run per benchmark configuration; 0 runs to final_time.
  int bench_steps = 1;

  double epsilon = 1.0;
  double sigma = 1.0;
  double mu = 1.0;
  std::array<double, 3> source{1.0, 1.0, 1.0};

  // Unset means {1} for solves and the sweep {0.001, ..., 100} for the stabilization bench.
  std::optional<std::vector<double>> alphas;
  StabilizationScope stabilization_scope = StabilizationScope::System;
  double stabilization_tau = 0.05;

  std::vector<PreconditionerVariant> variants{
    PreconditionerVariant::ExactExact, PreconditionerVariant::JacobiExact,
    PreconditionerVariant::ExactAMS, PreconditionerVariant::JacobiAMS};
  std::vector<int> threads{1, 2, 4, 8};
  double scalability_tau = 0.05;

  SolverConfig solver;
  AuxSpaceOptions aux;

  std::string output_dir = ".";
  bool write_vtk = false;

  std::vector<double> solve_alphas() const;
  std::vector<double> sweep_alphas() const;

  // Throws InvalidArgument listing the offending field.
  void validate() const;
};

// Parses a JSON document. Unknown keys and type errors throw InvalidArgument.
ExperimentConfig parse_config(const std::string &json_text);
ExperimentConfig load_config(const std::string &path);
std::string to_json(const ExperimentConfig &config);

}  // namespace maxvem

#endif  // MAXVEM_CONFIG_HPP
