#include <cmath>

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace maxvem;

namespace
{

double tet_volume(const Vec3 &a, const Vec3 &b, const Vec3 &c, const Vec3 &d)
{
  return std::abs((b - a).dot((c - a).cross(d - a))) / 6.0;
}

}  // namespace

TEST(Geometry, UnitCube)
{
  const auto m = generate_hex(1);
  const auto g = compute_geometry(m);
  EXPECT_NEAR(g.cell_volume[0], 1.0, 1e-14);
  EXPECT_NEAR(g.cell_diameter[0], std::sqrt(3.0), 1e-14);
  EXPECT_NEAR((g.cell_barycenter[0] - Vec3(0.5, 0.5, 0.5)).norm(), 0.0, 1e-14);
  for (int f = 0; f < m.num_faces(); f++)
  {
    EXPECT_NEAR(g.face_area[f], 1.0, 1e-14);
    EXPECT_NEAR(g.face_normal[f].norm(), 1.0, 1e-14);
  }
  for (int e = 0; e < m.num_edges(); e++)
  {
    EXPECT_NEAR(g.edge_length[e], 1.0, 1e-14);
  }
  EXPECT_NEAR(g.mesh_size, std::sqrt(3.0), 1e-14);
}

TEST(Geometry, FaceNormalsPointOutOfPositiveCells)
{
  const auto m = generate_hex(1);
  const auto g = compute_geometry(m);
  for (const auto &f : m.cell(0))
  {
    const Vec3 out = g.face_barycenter[f.index] - g.cell_barycenter[0];
    EXPECT_GT(f.sign * g.face_normal[f.index].dot(out), 0.0);
  }
}

TEST(Geometry, TetSplitVolumesAgainstDeterminantFormula)
{
  const auto m = generate_tet(1);
  const auto g = compute_geometry(m);
  double total = 0.0;
  for (int c = 0; c < m.num_cells(); c++)
  {
    const auto v = m.cell_vertices(c);
    ASSERT_EQ(v.size(), 4u);
    const double ref = tet_volume(m.vertex(v[0]), m.vertex(v[1]), m.vertex(v[2]), m.vertex(v[3]));
    EXPECT_NEAR(ref, 1.0 / 6.0, 1e-15);
    EXPECT_NEAR(g.cell_volume[c], ref, 1e-14);
    total += g.cell_volume[c];
  }
  EXPECT_NEAR(total, 1.0, 1e-13);
}

TEST(Geometry, VolumesSumToDomainOnSuite)
{
  for (const auto &[name, m] : test::mesh_suite())
  {
    const auto g = compute_geometry(m);
    Vec3 lo = m.vertex(0), hi = m.vertex(0);
    for (const auto &v : m.vertices())
    {
      lo = lo.cwiseMin(v);
      hi = hi.cwiseMax(v);
    }
    const double domain = (hi - lo).prod();
    double total = 0.0;
    for (double v : g.cell_volume)
    {
      EXPECT_GT(v, 0.0) << name;
      total += v;
    }
    EXPECT_NEAR(total / domain, 1.0, 1e-10) << name;
  }
}

TEST(Geometry, DivergenceTheoremForConstantFields)
{
  for (const auto &[name, m] : test::mesh_suite())
  {
    const auto g = compute_geometry(m);
    for (int c = 0; c < m.num_cells(); c++)
    {
      Vec3 flux = Vec3::Zero();
      double scale = 0.0;
      for (const auto &f : m.cell(c))
      {
        flux += f.sign * g.face_area[f.index] * g.face_normal[f.index];
        scale += g.face_area[f.index];
      }
      EXPECT_LE(flux.norm(), 1e-12 * scale) << name << " cell " << c;
    }
  }
}

TEST(Geometry, DivergenceVolumeMatchesTetDecomposition)
{
  // Convex cells: cone volumes from the vertex average over fan triangles of every face.
  for (const auto &[name, m] : test::mesh_suite())
  {
    if (name == "agglomerated")
    {
      continue;  // contains non-convex cells
    }
    const auto g = compute_geometry(m);
    for (int c = 0; c < m.num_cells(); c++)
    {
      const auto verts = m.cell_vertices(c);
      Vec3 center = Vec3::Zero();
      for (int v : verts)
      {
        center += m.vertex(v);
      }
      center /= double(verts.size());
      double vol = 0.0;
      for (const auto &f : m.cell(c))
      {
        const auto loop = m.face_vertices(f.index);
        for (std::size_t i = 1; i + 1 < loop.size(); i++)
        {
          vol += tet_volume(center, m.vertex(loop[0]), m.vertex(loop[i]), m.vertex(loop[i + 1]));
        }
      }
      EXPECT_NEAR(g.cell_volume[c] / vol, 1.0, 1e-10) << name << " cell " << c;
    }
  }
}

TEST(Geometry, RefinementHalvesMeshSize)
{
  for (int n : {1, 2, 4})
  {
    const double h = compute_geometry(generate_hex(n)).mesh_size;
    const double h2 = compute_geometry(generate_hex(2 * n)).mesh_size;
    EXPECT_DOUBLE_EQ(h2, h / 2.0);
  }
}

TEST(Geometry, ZeroAreaFaceThrows)
{
  // Flatten the unit cube onto z = 0: top and bottom coincide, side faces lose their area.
  const auto m = generate_hex(1);
  auto verts = m.vertices();
  for (auto &v : verts)
  {
    v[2] = 0.0;
  }
  const PolyMesh flat(verts, m.edges(), m.faces(), m.cells());
  EXPECT_THROW(compute_geometry(flat), GeometryError);
}

TEST(Geometry, SampleMeshHasNonConvexAndPrismCells)
{
  const auto m = test::sample_mesh();
  const auto g = compute_geometry(m);
  int triangles = 0;
  std::size_t max_faces = 0;
  for (int f = 0; f < m.num_faces(); f++)
  {
    triangles += m.face(f).size() == 3;
  }
  for (int c = 0; c < m.num_cells(); c++)
  {
    max_faces = std::max(max_faces, m.cell(c).size());
  }
  EXPECT_GT(triangles, 0);
  EXPECT_GE(max_faces, 14u);
  EXPECT_GT(g.mesh_size, 0.0);
}
