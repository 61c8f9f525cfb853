#include <random>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace maxvem;

namespace
{

Vector local_dofs(const LocalSpace &sp, const Vector &global)
{
  Vector out(sp.size());
  for (int i = 0; i < sp.size(); i++)
  {
    out[i] = global[sp.dofs[i]];
  }
  return out;
}

}  // namespace

TEST(EdgeSpace, ConstantFieldOnUnitCube)
{
  const auto m = generate_hex(1);
  const auto g = compute_geometry(m);
  const auto sp = local_edge_space(m, g, 0);
  ASSERT_EQ(sp.size(), 12);
  const Vector dofs = interpolate_edge_field(m, g, [](const Vec3 &) { return Vec3(1, 0, 0); });
  EXPECT_LT((sp.projection * local_dofs(sp, dofs) - Vec3(1, 0, 0)).norm(), 1e-14);
  EXPECT_LT((sp.projection * Vector::Zero(12)).norm(), 1e-300);
}

TEST(EdgeSpace, DivergenceFreeLinearFieldProjectsToCellAverage)
{
  // v = beta (y, -x, 0) + c has constant tangential traces on axis-aligned edges; its
  // average over [lo, hi] is beta (ybar, -xbar, 0) + c.
  std::mt19937 rng(1);
  for (const Vec3 &lo : {Vec3(0, 0, 0), Vec3(2.0, -3.0, 1.5)})
  {
    Box box;
    box.lo = lo;
    box.hi = lo + Vec3(1.0, 0.5, 2.0);
    const auto m = generate_hex(1, box);
    const auto g = compute_geometry(m);
    const auto sp = local_edge_space(m, g, 0);
    for (int trial = 0; trial < 3; trial++)
    {
      const double beta = std::uniform_real_distribution<double>(-2.0, 2.0)(rng);
      const Vec3 c = test::random_vec3(rng);
      const auto v = [&](const Vec3 &x) -> Vec3 { return Vec3(beta * x[1], -beta * x[0], 0.0) + c; };
      const Vec3 mid = 0.5 * (box.lo + box.hi);
      const Vec3 average = Vec3(beta * mid[1], -beta * mid[0], 0.0) + c;
      const Vec3 proj = sp.projection * local_dofs(sp, interpolate_edge_field(m, g, v));
      EXPECT_LT((proj - average).norm(), 1e-12 * (1.0 + average.norm()));
    }
  }
}

TEST(FaceSpace, ConstantFieldOnUnitCube)
{
  const auto m = generate_hex(1);
  const auto g = compute_geometry(m);
  const auto sp = local_face_space(m, g, 0);
  ASSERT_EQ(sp.size(), 6);
  const Vector dofs = interpolate_face_field(m, g, [](const Vec3 &) { return Vec3(0, 0, 1); });
  for (int f = 0; f < 6; f++)
  {
    EXPECT_NEAR(std::abs(dofs[f]), std::abs(g.face_normal[f][2]), 1e-15);
  }
  EXPECT_LT((sp.projection * local_dofs(sp, dofs) - Vec3(0, 0, 1)).norm(), 1e-14);
  EXPECT_LT((sp.projection * Vector::Zero(6)).norm(), 1e-300);
}

TEST(FaceSpace, RandomConstantOnSplitTetrahedra)
{
  const auto m = generate_tet(2);
  const auto g = compute_geometry(m);
  std::mt19937 rng(2);
  for (int c = 0; c < m.num_cells(); c++)
  {
    const Vec3 k = test::random_vec3(rng);
    const auto sp = local_face_space(m, g, c);
    const Vector dofs = interpolate_face_field(m, g, [&](const Vec3 &) { return k; });
    EXPECT_LT((sp.projection * local_dofs(sp, dofs) - k).norm(), 1e-12);
  }
}

TEST(LocalSpaces, ProjectionReproducesConstantsOnSuite)
{
  for (const auto &[name, m] : test::mesh_suite())
  {
    const auto g = compute_geometry(m);
    const auto ops = build_local_operators(m, g);
    for (int c = 0; c < m.num_cells(); c++)
    {
      for (const auto *sp : {&ops.edge[c], &ops.face[c]})
      {
        const Eigen::Matrix3d pd = sp->projection * sp->constant_dofs;
        EXPECT_LT((pd - Eigen::Matrix3d::Identity()).norm(), 1e-12) << name << " cell " << c;
      }
    }
  }
}

TEST(LocalSpaces, ConstantDofRows)
{
  const auto m = test::sample_mesh();
  const auto g = compute_geometry(m);
  const auto e = local_edge_space(m, g, 7);
  for (int i = 0; i < e.size(); i++)
  {
    EXPECT_LT((e.constant_dofs.row(i).transpose() - g.edge_tangent[e.dofs[i]]).norm(), 1e-15);
  }
  const auto f = local_face_space(m, g, 7);
  for (int i = 0; i < f.size(); i++)
  {
    const Vec3 ref = g.face_area[f.dofs[i]] * g.face_normal[f.dofs[i]];
    EXPECT_LT((f.constant_dofs.row(i).transpose() - ref).norm(), 1e-15);
  }
}

TEST(LocalMass, StabilizationVanishesOnConstants)
{
  std::mt19937 rng(4);
  for (const auto &[name, m] : test::mesh_suite())
  {
    const auto g = compute_geometry(m);
    const auto ops = build_local_operators(m, g);
    for (int c = 0; c < m.num_cells(); c++)
    {
      for (const auto *sp : {&ops.edge[c], &ops.face[c]})
      {
        const Vec3 k = test::random_vec3(rng);
        const Vector u = sp->constant_dofs * k;
        const Eigen::MatrixXd s = sp->stabilization();
        EXPECT_LE((s * sp->constant_dofs).norm(), 1e-12 * std::max(1.0, s.norm())) << name;
        for (double alpha : {0.0, 0.5, 1.0, 10.0})
        {
          const double energy = u.dot(sp->mass(alpha) * u);
          const double ref = sp->volume * k.squaredNorm();
          EXPECT_NEAR(energy / ref, 1.0, 1e-12) << name << " cell " << c << " alpha " << alpha;
        }
      }
    }
  }
}

TEST(LocalMass, AlphaZeroIsRankThreeConsistency)
{
  const auto m = generate_hex(1);
  const auto g = compute_geometry(m);
  for (const auto &sp : {local_edge_space(m, g, 0), local_face_space(m, g, 0)})
  {
    const Eigen::MatrixXd m0 = sp.mass(0.0);
    EXPECT_LT(test::rel_diff(m0, sp.consistency()), 1e-15);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m0);
    lu.setThreshold(1e-10);
    EXPECT_LE(lu.rank(), 3);
  }
}

TEST(LocalMass, SpdOnCubeByDenseEigensolver)
{
  const auto m = generate_hex(1);
  const auto g = compute_geometry(m);
  for (const auto &sp : {local_edge_space(m, g, 0), local_face_space(m, g, 0)})
  {
    const Eigen::MatrixXd mass = sp.mass(1.0);
    EXPECT_LT((mass - mass.transpose()).norm(), 1e-15 * mass.norm());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(mass);
    EXPECT_GT(eig.eigenvalues().minCoeff(), 1e-3 * eig.eigenvalues().maxCoeff());
  }
}

TEST(LocalMass, SpdOnEverySuiteCell)
{
  for (const auto &[name, m] : test::mesh_suite())
  {
    const auto g = compute_geometry(m);
    const auto ops = build_local_operators(m, g);
    for (int c = 0; c < m.num_cells(); c++)
    {
      for (const auto *sp : {&ops.edge[c], &ops.face[c]})
      {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sp->mass(1.0));
        EXPECT_GT(eig.eigenvalues().minCoeff(), 0.0) << name << " cell " << c;
      }
    }
  }
}

TEST(LocalMass, NegativeAlphaThrows)
{
  const auto m = generate_hex(1);
  const auto g = compute_geometry(m);
  EXPECT_THROW(local_edge_space(m, g, 0).mass(-1e-3), InvalidArgument);
  EXPECT_THROW(local_face_space(m, g, 0).mass(-1.0), InvalidArgument);
}

TEST(LocalMass, DimensionalScaling)
{
  // x -> 2x: edge values are dimensionless per length, so M_E ~ s^3; face fluxes carry
  // s^2, so M_F ~ s^3 / s^4.
  const auto m = test::sample_mesh();
  auto verts = m.vertices();
  for (auto &v : verts)
  {
    v *= 2.0;
  }
  const PolyMesh big(verts, m.edges(), m.faces(), m.cells());
  const auto g1 = compute_geometry(m), g2 = compute_geometry(big);
  for (int c : {0, 11, 40})
  {
    const auto e1 = local_edge_space(m, g1, c).mass(1.0);
    const auto e2 = local_edge_space(big, g2, c).mass(1.0);
    EXPECT_LT(test::rel_diff(e2, 8.0 * e1), 1e-12);
    const auto f1 = local_face_space(m, g1, c).mass(1.0);
    const auto f2 = local_face_space(big, g2, c).mass(1.0);
    EXPECT_LT(test::rel_diff(f2, 0.5 * f1), 1e-12);
  }
}

TEST(LocalSpaces, BuildLocalOperatorsMatchesSingleCellCalls)
{
  const auto m = generate_tet(2);
  const auto g = compute_geometry(m);
  const auto ops = build_local_operators(m, g);
  ASSERT_EQ(int(ops.edge.size()), m.num_cells());
  for (int c : {0, 17, 47})
  {
    EXPECT_EQ(ops.edge[c].projection, local_edge_space(m, g, c).projection);
    EXPECT_EQ(ops.face[c].projection, local_face_space(m, g, c).projection);
    EXPECT_EQ(ops.edge[c].dofs, m.cell_edges(c));
  }
}
