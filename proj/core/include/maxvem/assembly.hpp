#ifndef MAXVEM_ASSEMBLY_HPP
#define MAXVEM_ASSEMBLY_HPP

#include <functional>
#include <vector>

#include "maxvem/geometry.hpp"
#include "maxvem/mesh.hpp"
#include "maxvem/sparse.hpp"
#include "maxvem/vem.hpp"

namespace maxvem
{

// Cell-wise constant material data and the timestep.
struct PhysParams
{
  std::vector<double> epsilon;
  std::vector<double> sigma;
  std::vector<double> mu;
  double tau = 0.05;

  static PhysParams uniform(int num_cells, double epsilon, double sigma, double mu, double tau);

  // epsilon > 0, mu > 0, sigma >= 0 per cell, tau > 0; throws InvalidArgument otherwise.
  void validate(int num_cells) const;
};

// Essential boundary conditions are enforced by elimination: boundary edges, faces and
// vertices are constrained to zero and removed from the algebraic system.
struct DofPartition
{
  int total_edges = 0;
  int total_faces = 0;
  std::vector<int> free_edges;
  std::vector<int> free_faces;
  std::vector<int> free_vertices;

  int total_dofs() const { return total_edges + total_faces; }
  int free_dofs() const { return num_free_edges() + num_free_faces(); }
  int num_free_edges() const { return static_cast<int>(free_edges.size()); }
  int num_free_faces() const { return static_cast<int>(free_faces.size()); }
};

DofPartition apply_boundary_conditions(const PolyMesh &mesh);

//
// Implicit Euler step of the two-field system in (B, E) ordering,
//
//   [ C   B2 ] [B]   [rhs_B]
//   [ B1  A  ] [E] = [rhs_E],
//
// C = (mu tau)^-1 M_F, B2 = mu^-1 M_F CURL, B1 = -CURL^T mu^-1 M_F, A = (eps/tau + sigma) M_E,
// with the weights applied cell by cell inside the mass assemblies. All blocks are restricted
// to free DoFs.
//
struct BlockSystem
{
  SparseMatrix C, B2, B1, A;
  SparseMatrix schur;   // A - B1 C^-1 B2 in its sparse form
  SparseMatrix matrix;  // the assembled 2x2 block operator

  DofPartition dofs;
  SparseMatrix curl;            // free faces x free edges
  SparseMatrix edge_mass;       // unweighted M_E
  SparseMatrix edge_mass_eps;   // eps-weighted M_E
  SparseMatrix face_mass_mu;    // mu^-1-weighted M_F
  double tau = 0.0;
  double alpha = 1.0;

  int num_b() const { return dofs.num_free_faces(); }
  int num_e() const { return dofs.num_free_edges(); }
  int size() const { return num_b() + num_e(); }
};

// Global mass matrix over all DoFs of one space: sum_P weight_P * M_P(alpha).
SparseMatrix assemble_mass(const std::vector<LocalSpace> &spaces,
                           const std::vector<double> &weights, double alpha, int num_dofs);

BlockSystem assemble_blocks(const PolyMesh &mesh, const LocalOperators &local,
                            const IncidenceOperators &incidence, const PhysParams &params,
                            double alpha);

// S_C = A + tau CURL^T (mu^-1 M_F) CURL. Equal to A - B1 C^-1 B2 because boundary faces
// carry no interior edge.
SparseMatrix assemble_schur(const BlockSystem &blocks);

// Free-DoF field state, B block first.
struct StateVector
{
  Vector B;
  Vector E;

  static StateVector zero(const BlockSystem &sys);
  Vector stacked() const;
  static StateVector split(const BlockSystem &sys, const Vector &x);
};

using VectorField = std::function<Vec3(const Vec3 &)>;

// dof_e = f(midpoint).t_e over all edges.
Vector interpolate_edge_field(const PolyMesh &mesh, const GeometricCache &geom,
                              const VectorField &f);

// dof_F = |F| f(x_F).n_F over all faces.
Vector interpolate_face_field(const PolyMesh &mesh, const GeometricCache &geom,
                              const VectorField &f);

Vector restrict_to(const Vector &all, const std::vector<int> &ids);
Vector expand_from(const Vector &restricted, const std::vector<int> &ids, int total);

// rhs_B = C B_prev, rhs_E = (1/tau) M_E^eps E_prev + M_E J. current_dofs holds free edge DoFs.
Vector assemble_rhs(const BlockSystem &sys, const StateVector &previous,
                    const Vector &current_dofs);

}  // namespace maxvem

#endif  // MAXVEM_ASSEMBLY_HPP
