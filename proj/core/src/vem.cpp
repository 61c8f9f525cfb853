#include "maxvem/vem.hpp"

#include <algorithm>
#include <exception>
#include <mutex>

#include <Eigen/SVD>

#include "maxvem/error.hpp"

namespace maxvem
{

namespace
{

// Solves G Pi = R with G = R D, the Gram system of the constant fields expressed through
// the DoFs. For planar faces G = |P| I up to rounding.
Eigen::Matrix3Xd solve_moments(const Eigen::Matrix3Xd &rhs, const Eigen::MatrixX3d &dofs,
                               int cell, const char *space)
{
  const Eigen::Matrix3d gram = rhs * dofs;
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(gram);
  const auto &s = svd.singularValues();
  if (!(s[2] > 1e-12 * s[0]))
  {
    throw SingularError(std::string(space) + " moment system of cell " + std::to_string(cell) +
                        " is rank deficient");
  }
  return gram.partialPivLu().solve(rhs);
}

}  // namespace

Eigen::MatrixXd LocalSpace::consistency() const
{
  return volume * projection.transpose() * projection;
}

Eigen::MatrixXd LocalSpace::stabilization() const
{
  const Eigen::MatrixXd consist = consistency();
  const double sigma = consist.trace() / size();
  const Eigen::MatrixXd residual =
    Eigen::MatrixXd::Identity(size(), size()) - constant_dofs * projection;
  return sigma * residual.transpose() * residual;
}

Eigen::MatrixXd LocalSpace::mass(double alpha) const
{
  if (!(alpha >= 0.0))
  {
    throw InvalidArgument("stabilization parameter must be non-negative");
  }
  Eigen::MatrixXd m = consistency();
  if (alpha > 0.0)
  {
    m += alpha * stabilization();
  }
  return m;
}

LocalSpace local_edge_space(const PolyMesh &mesh, const GeometricCache &geom, int cell)
{
  LocalSpace space;
  space.cell = cell;
  space.dofs = mesh.cell_edges(cell);
  space.volume = geom.cell_volume[cell];
  const int n = space.size();

  const Vec3 &xp = geom.cell_barycenter[cell];
  Eigen::Matrix3Xd moments = Eigen::Matrix3Xd::Zero(3, n);
  for (const auto &f : mesh.cell(cell))
  {
    const Vec3 &xf = geom.face_barycenter[f.index];
    const Vec3 d = xf - xp;
    for (const auto &e : mesh.face(f.index))
    {
      const auto pos = std::lower_bound(space.dofs.begin(), space.dofs.end(), e.index) -
                       space.dofs.begin();
      const Vec3 r = d.cross(geom.edge_midpoint[e.index] - xf);
      moments.col(pos) += 0.5 * f.sign * e.sign * geom.edge_length[e.index] * r;
    }
  }
  space.constant_dofs.resize(n, 3);
  for (int i = 0; i < n; i++)
  {
    space.constant_dofs.row(i) = geom.edge_tangent[space.dofs[i]].transpose();
  }
  space.projection = solve_moments(moments, space.constant_dofs, cell, "edge");
  return space;
}

LocalSpace local_face_space(const PolyMesh &mesh, const GeometricCache &geom, int cell)
{
  LocalSpace space;
  space.cell = cell;
  for (const auto &f : mesh.cell(cell))
  {
    space.dofs.push_back(f.index);
  }
  std::sort(space.dofs.begin(), space.dofs.end());
  space.volume = geom.cell_volume[cell];
  const int n = space.size();

  const Vec3 &xp = geom.cell_barycenter[cell];
  Eigen::Matrix3Xd moments(3, n);
  for (const auto &f : mesh.cell(cell))
  {
    const auto pos = std::lower_bound(space.dofs.begin(), space.dofs.end(), f.index) -
                     space.dofs.begin();
    moments.col(pos) = f.sign * (geom.face_barycenter[f.index] - xp);
  }
  space.constant_dofs.resize(n, 3);
  for (int i = 0; i < n; i++)
  {
    const int f = space.dofs[i];
    space.constant_dofs.row(i) = geom.face_area[f] * geom.face_normal[f].transpose();
  }
  space.projection = solve_moments(moments, space.constant_dofs, cell, "face");
  return space;
}

LocalOperators build_local_operators(const PolyMesh &mesh, const GeometricCache &geom)
{
  LocalOperators ops;
  const int nc = mesh.num_cells();
  ops.edge.resize(nc);
  ops.face.resize(nc);
  std::exception_ptr error;
  std::mutex guard;
#pragma omp parallel for schedule(dynamic, 64)
  for (int c = 0; c < nc; c++)
  {
    try
    {
      ops.edge[c] = local_edge_space(mesh, geom, c);
      ops.face[c] = local_face_space(mesh, geom, c);
    }
    catch (...)
    {
      std::lock_guard lock(guard);
      if (!error)
      {
        error = std::current_exception();
      }
    }
  }
  if (error)
  {
    std::rethrow_exception(error);
  }
  return ops;
}

IncidenceOperators build_incidence(const PolyMesh &mesh, const GeometricCache &geom)
{
  IncidenceOperators ops;
  {
    std::vector<Triplet> t;
    for (int f = 0; f < mesh.num_faces(); f++)
    {
      for (const auto &e : mesh.face(f))
      {
        t.push_back({f, e.index, e.sign * geom.edge_length[e.index]});
      }
    }
    ops.curl = SparseMatrix::from_triplets(mesh.num_faces(), mesh.num_edges(), std::move(t));
  }
  {
    std::vector<Triplet> t;
    for (int e = 0; e < mesh.num_edges(); e++)
    {
      const double inv = 1.0 / geom.edge_length[e];
      t.push_back({e, mesh.edge(e)[0], -inv});
      t.push_back({e, mesh.edge(e)[1], inv});
    }
    ops.grad = SparseMatrix::from_triplets(mesh.num_edges(), mesh.num_vertices(), std::move(t));
  }
  {
    std::vector<Triplet> t;
    for (int c = 0; c < mesh.num_cells(); c++)
    {
      for (const auto &f : mesh.cell(c))
      {
        t.push_back({c, f.index, double(f.sign)});
      }
    }
    ops.div = SparseMatrix::from_triplets(mesh.num_cells(), mesh.num_faces(), std::move(t));
  }
  ops.nodal = nodal_interpolation(mesh, geom);
  return ops;
}

SparseMatrix nodal_interpolation(const PolyMesh &mesh, const GeometricCache &geom)
{
  std::vector<Triplet> t;
  t.reserve(6 * std::size_t(mesh.num_edges()));
  for (int e = 0; e < mesh.num_edges(); e++)
  {
    const Vec3 &tan = geom.edge_tangent[e];
    for (int v : mesh.edge(e))
    {
      for (int k = 0; k < 3; k++)
      {
        t.push_back({e, 3 * v + k, 0.5 * tan[k]});
      }
    }
  }
  return SparseMatrix::from_triplets(mesh.num_edges(), 3 * mesh.num_vertices(), std::move(t));
}

}  // namespace maxvem
