#include "maxvem/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "maxvem/error.hpp"

namespace maxvem
{

GeometricCache compute_geometry(const PolyMesh &mesh)
{
  GeometricCache g;
  const int ne = mesh.num_edges(), nf = mesh.num_faces(), nc = mesh.num_cells();

  g.edge_length.resize(ne);
  g.edge_tangent.resize(ne);
  g.edge_midpoint.resize(ne);
  for (int e = 0; e < ne; e++)
  {
    const Vec3 &a = mesh.vertex(mesh.edge(e)[0]);
    const Vec3 &b = mesh.vertex(mesh.edge(e)[1]);
    const double len = (b - a).norm();
    if (!(len > 0.0))
    {
      throw GeometryError("edge " + std::to_string(e) + " has zero length");
    }
    g.edge_length[e] = len;
    g.edge_tangent[e] = (b - a) / len;
    g.edge_midpoint[e] = 0.5 * (a + b);
  }

  g.face_area.resize(nf);
  g.face_normal.resize(nf);
  g.face_barycenter.resize(nf);
  for (int f = 0; f < nf; f++)
  {
    const auto loop = mesh.face_vertices(f);
    Vec3 center = Vec3::Zero();
    for (int v : loop)
    {
      center += mesh.vertex(v);
    }
    center /= double(loop.size());
    Vec3 vector_area = Vec3::Zero();
    for (std::size_t i = 0; i < loop.size(); i++)
    {
      const Vec3 &p = mesh.vertex(loop[i]);
      const Vec3 &q = mesh.vertex(loop[(i + 1) % loop.size()]);
      vector_area += 0.5 * (p - center).cross(q - center);
    }
    const double area = vector_area.norm();
    double perimeter = 0.0;
    for (const auto &e : mesh.face(f))
    {
      perimeter += g.edge_length[e.index];
    }
    if (!(area > 1e-14 * perimeter * perimeter))
    {
      throw GeometryError("face " + std::to_string(f) + " is degenerate (zero area)");
    }
    const Vec3 n = vector_area / area;
    // Area-weighted centroid of the fan triangles; signed areas keep non-convex planar
    // faces correct.
    Vec3 moment = Vec3::Zero();
    for (std::size_t i = 0; i < loop.size(); i++)
    {
      const Vec3 &p = mesh.vertex(loop[i]);
      const Vec3 &q = mesh.vertex(loop[(i + 1) % loop.size()]);
      const double a = 0.5 * (p - center).cross(q - center).dot(n);
      moment += a * (center + p + q) / 3.0;
    }
    g.face_area[f] = area;
    g.face_normal[f] = n;
    g.face_barycenter[f] = moment / area;
  }

  g.cell_volume.resize(nc);
  g.cell_barycenter.resize(nc);
  g.cell_diameter.resize(nc);
  for (int c = 0; c < nc; c++)
  {
    const auto verts = mesh.cell_vertices(c);
    Vec3 ref = Vec3::Zero();
    for (int v : verts)
    {
      ref += mesh.vertex(v);
    }
    ref /= double(verts.size());

    // Divergence theorem with the field x - ref: |P| = 1/3 sum_F s_F |F| (x_F - ref).n_F.
    double volume = 0.0;
    for (const auto &f : mesh.cell(c))
    {
      volume += f.sign * g.face_area[f.index] *
                (g.face_barycenter[f.index] - ref).dot(g.face_normal[f.index]);
    }
    volume /= 3.0;
    if (!(volume > 0.0))
    {
      throw GeometryError("cell " + std::to_string(c) + " has non-positive volume " +
                          std::to_string(volume) + " (orientation or degenerate cell)");
    }

    // First moment from the signed cone decomposition (ref, face fan triangle).
    Vec3 moment = Vec3::Zero();
    for (const auto &f : mesh.cell(c))
    {
      const auto loop = mesh.face_vertices(f.index);
      const Vec3 &xf = g.face_barycenter[f.index];
      for (std::size_t i = 0; i < loop.size(); i++)
      {
        const Vec3 &p = mesh.vertex(loop[i]);
        const Vec3 &q = mesh.vertex(loop[(i + 1) % loop.size()]);
        const double vol = f.sign * (xf - ref).dot((p - xf).cross(q - xf)) / 6.0;
        moment += vol * (ref + xf + p + q) / 4.0;
      }
    }
    g.cell_volume[c] = volume;
    g.cell_barycenter[c] = moment / volume;

    double diameter = 0.0;
    for (std::size_t i = 0; i < verts.size(); i++)
    {
      for (std::size_t j = i + 1; j < verts.size(); j++)
      {
        diameter = std::max(diameter, (mesh.vertex(verts[i]) - mesh.vertex(verts[j])).norm());
      }
    }
    g.cell_diameter[c] = diameter;
    g.mesh_size = std::max(g.mesh_size, diameter);
  }
  return g;
}

}  // namespace maxvem
