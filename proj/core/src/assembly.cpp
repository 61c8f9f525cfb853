#include "maxvem/assembly.hpp"

#include <cmath>

#include "maxvem/error.hpp"

namespace maxvem
{

PhysParams PhysParams::uniform(int num_cells, double epsilon, double sigma, double mu,
                               double tau)
{
  PhysParams p;
  p.epsilon.assign(num_cells, epsilon);
  p.sigma.assign(num_cells, sigma);
  p.mu.assign(num_cells, mu);
  p.tau = tau;
  return p;
}

void PhysParams::validate(int num_cells) const
{
  if (int(epsilon.size()) != num_cells || int(sigma.size()) != num_cells ||
      int(mu.size()) != num_cells)
  {
    throw InvalidArgument("material arrays must have one entry per cell");
  }
  if (!(tau > 0.0) || !std::isfinite(tau))
  {
    throw InvalidArgument("timestep must be positive");
  }
  for (int c = 0; c < num_cells; c++)
  {
    if (!(epsilon[c] > 0.0) || !(mu[c] > 0.0) || !(sigma[c] >= 0.0))
    {
      throw InvalidArgument("cell " + std::to_string(c) +
                            ": need epsilon > 0, mu > 0, sigma >= 0");
    }
  }
}

DofPartition apply_boundary_conditions(const PolyMesh &mesh)
{
  DofPartition d;
  d.total_edges = mesh.num_edges();
  d.total_faces = mesh.num_faces();
  for (int e = 0; e < mesh.num_edges(); e++)
  {
    if (!mesh.is_boundary_edge(e))
    {
      d.free_edges.push_back(e);
    }
  }
  for (int f = 0; f < mesh.num_faces(); f++)
  {
    if (!mesh.is_boundary_face(f))
    {
      d.free_faces.push_back(f);
    }
  }
  for (int v = 0; v < mesh.num_vertices(); v++)
  {
    if (!mesh.is_boundary_vertex(v))
    {
      d.free_vertices.push_back(v);
    }
  }
  return d;
}

namespace
{

std::vector<Eigen::MatrixXd> local_masses(const std::vector<LocalSpace> &spaces, double alpha)
{
  std::vector<Eigen::MatrixXd> out(spaces.size());
  if (!(alpha >= 0.0))
  {
    throw InvalidArgument("stabilization parameter must be non-negative");
  }
#pragma omp parallel for schedule(dynamic, 64)
  for (std::size_t c = 0; c < spaces.size(); c++)
  {
    out[c] = spaces[c].mass(alpha);
  }
  return out;
}

// Triplets are emitted in fixed cell order so the sums are reproducible.
SparseMatrix sum_weighted(const std::vector<LocalSpace> &spaces,
                          const std::vector<Eigen::MatrixXd> &local,
                          const std::vector<double> &weights, int num_dofs)
{
  std::vector<Triplet> t;
  std::size_t count = 0;
  for (const auto &m : local)
  {
    count += m.size();
  }
  t.reserve(count);
  for (std::size_t c = 0; c < spaces.size(); c++)
  {
    const auto &dofs = spaces[c].dofs;
    for (int i = 0; i < int(dofs.size()); i++)
    {
      for (int j = 0; j < int(dofs.size()); j++)
      {
        t.push_back({dofs[i], dofs[j], weights[c] * local[c](i, j)});
      }
    }
  }
  return SparseMatrix::from_triplets(num_dofs, num_dofs, std::move(t));
}

}  // namespace

SparseMatrix assemble_mass(const std::vector<LocalSpace> &spaces,
                           const std::vector<double> &weights, double alpha, int num_dofs)
{
  if (weights.size() != spaces.size())
  {
    throw InvalidArgument("one weight per cell required");
  }
  return sum_weighted(spaces, local_masses(spaces, alpha), weights, num_dofs);
}

BlockSystem assemble_blocks(const PolyMesh &mesh, const LocalOperators &local,
                            const IncidenceOperators &incidence, const PhysParams &params,
                            double alpha)
{
  const int nc = mesh.num_cells();
  params.validate(nc);
  if (!(alpha >= 0.0))
  {
    throw InvalidArgument("stabilization parameter must be non-negative");
  }

  BlockSystem sys;
  sys.tau = params.tau;
  sys.alpha = alpha;
  sys.dofs = apply_boundary_conditions(mesh);
  const auto &fe = sys.dofs.free_edges;
  const auto &ff = sys.dofs.free_faces;

  std::vector<double> w_a(nc), w_eps(nc), w_unit(nc, 1.0), w_mu(nc), w_c(nc);
  for (int c = 0; c < nc; c++)
  {
    w_a[c] = params.epsilon[c] / params.tau + params.sigma[c];
    w_eps[c] = params.epsilon[c];
    w_mu[c] = 1.0 / params.mu[c];
    w_c[c] = 1.0 / (params.mu[c] * params.tau);
  }

  const auto edge_local = local_masses(local.edge, alpha);
  const auto face_local = local_masses(local.face, alpha);
  const int ne = mesh.num_edges(), nf = mesh.num_faces();

  sys.A = sum_weighted(local.edge, edge_local, w_a, ne).submatrix(fe, fe);
  sys.edge_mass = sum_weighted(local.edge, edge_local, w_unit, ne).submatrix(fe, fe);
  sys.edge_mass_eps = sum_weighted(local.edge, edge_local, w_eps, ne).submatrix(fe, fe);
  sys.face_mass_mu = sum_weighted(local.face, face_local, w_mu, nf).submatrix(ff, ff);
  sys.C = sum_weighted(local.face, face_local, w_c, nf).submatrix(ff, ff);
  sys.curl = incidence.curl.submatrix(ff, fe);

  sys.B2 = sys.face_mass_mu * sys.curl;
  sys.B1 = (sys.curl.transpose() * sys.face_mass_mu).scaled(-1.0);
  sys.schur = assemble_schur(sys);
  sys.matrix = block_matrix(sys.C, sys.B2, sys.B1, sys.A);
  return sys;
}

SparseMatrix assemble_schur(const BlockSystem &blocks)
{
  const SparseMatrix curl_curl = blocks.curl.transpose() * (blocks.face_mass_mu * blocks.curl);
  return add(1.0, blocks.A, blocks.tau, curl_curl);
}

StateVector StateVector::zero(const BlockSystem &sys)
{
  return {Vector::Zero(sys.num_b()), Vector::Zero(sys.num_e())};
}

Vector StateVector::stacked() const
{
  Vector x(B.size() + E.size());
  x << B, E;
  return x;
}

StateVector StateVector::split(const BlockSystem &sys, const Vector &x)
{
  if (x.size() != sys.size())
  {
    throw InvalidArgument("state vector length does not match the free-DoF partition");
  }
  return {x.head(sys.num_b()), x.tail(sys.num_e())};
}

Vector interpolate_edge_field(const PolyMesh &mesh, const GeometricCache &geom,
                              const VectorField &f)
{
  Vector dofs(mesh.num_edges());
  for (int e = 0; e < mesh.num_edges(); e++)
  {
    dofs[e] = f(geom.edge_midpoint[e]).dot(geom.edge_tangent[e]);
  }
  return dofs;
}

Vector interpolate_face_field(const PolyMesh &mesh, const GeometricCache &geom,
                              const VectorField &f)
{
  Vector dofs(mesh.num_faces());
  for (int k = 0; k < mesh.num_faces(); k++)
  {
    dofs[k] = geom.face_area[k] * f(geom.face_barycenter[k]).dot(geom.face_normal[k]);
  }
  return dofs;
}

Vector restrict_to(const Vector &all, const std::vector<int> &ids)
{
  Vector out(ids.size());
  for (std::size_t i = 0; i < ids.size(); i++)
  {
    out[i] = all[ids[i]];
  }
  return out;
}

Vector expand_from(const Vector &restricted, const std::vector<int> &ids, int total)
{
  Vector out = Vector::Zero(total);
  for (std::size_t i = 0; i < ids.size(); i++)
  {
    out[ids[i]] = restricted[i];
  }
  return out;
}

Vector assemble_rhs(const BlockSystem &sys, const StateVector &previous,
                    const Vector &current_dofs)
{
  if (previous.B.size() != sys.num_b() || previous.E.size() != sys.num_e() ||
      current_dofs.size() != sys.num_e())
  {
    throw InvalidArgument("assemble_rhs: dimension mismatch with the free-DoF partition");
  }
  Vector rhs_b = sys.C * previous.B;
  Vector rhs_e = sys.edge_mass * current_dofs;
  sys.edge_mass_eps.multiply_add(previous.E, rhs_e, 1.0 / sys.tau);
  Vector rhs(sys.size());
  rhs << rhs_b, rhs_e;
  return rhs;
}

}  // namespace maxvem
