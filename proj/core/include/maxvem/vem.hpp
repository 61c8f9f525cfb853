#ifndef MAXVEM_VEM_HPP
#define MAXVEM_VEM_HPP

#include <vector>

#include <Eigen/Dense>

#include "maxvem/geometry.hpp"
#include "maxvem/mesh.hpp"
#include "maxvem/sparse.hpp"

namespace maxvem
{

//
// Lowest-order local virtual element space on one cell, either the H(curl) edge space
// (one DoF per edge, the tangential value v.t_e) or the H(div) face space (one DoF per
// face, the flux int_F w.n_F). DoFs use the global edge tangents and face normals.
//
struct LocalSpace
{
  int cell = -1;
  std::vector<int> dofs;  // global edge or face indices, sorted
  double volume = 0.0;

  // L2 projection onto constant vector fields: 3 x n.
  Eigen::Matrix3Xd projection;
  // DoFs of the three unit constant fields: n x 3.
  Eigen::MatrixX3d constant_dofs;

  int size() const { return static_cast<int>(dofs.size()); }

  // |P| Pi^T Pi
  Eigen::MatrixXd consistency() const;

  // sigma_P (I - D Pi)^T (I - D Pi), sigma_P = trace(consistency) / n
  Eigen::MatrixXd stabilization() const;

  // consistency + alpha * stabilization. Throws InvalidArgument for alpha < 0; alpha = 0
  // yields the rank-3 consistency term.
  Eigen::MatrixXd mass(double alpha) const;
};

// Edge space of one cell. Pi0E follows from the integration-by-parts identity
// int_P v.a = 1/2 sum_F s_F int_F v_t.(a x (x_F - x_P)) with the face integrals evaluated
// from the tangential edge values; the resulting 3x3 moment system is solved per cell.
// Throws SingularError when the moment system is rank deficient.
LocalSpace local_edge_space(const PolyMesh &mesh, const GeometricCache &geom, int cell);

// Face space of one cell: int_P w.a = sum_F s_F dof_F a.(x_F - x_P).
LocalSpace local_face_space(const PolyMesh &mesh, const GeometricCache &geom, int cell);

// Local spaces of every cell, built in parallel over cells.
struct LocalOperators
{
  std::vector<LocalSpace> edge;
  std::vector<LocalSpace> face;
};

LocalOperators build_local_operators(const PolyMesh &mesh, const GeometricCache &geom);

//
// Global topological operators of the discrete de Rham complex.
//
struct IncidenceOperators
{
  SparseMatrix curl;   // faces x edges, sign(e, F) |e|
  SparseMatrix grad;   // edges x vertices, +-1/|e|
  SparseMatrix div;    // cells x faces, sign(F, P)
  SparseMatrix nodal;  // edges x 3*vertices, t_e . (u(v1) + u(v2)) / 2; vertex-major
};

IncidenceOperators build_incidence(const PolyMesh &mesh, const GeometricCache &geom);

// Nodal vector interpolation onto edge DoFs by endpoint averaging. Column 3*v + k is the
// k-th component at vertex v.
SparseMatrix nodal_interpolation(const PolyMesh &mesh, const GeometricCache &geom);

}  // namespace maxvem

#endif  // MAXVEM_VEM_HPP
