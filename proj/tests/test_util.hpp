#ifndef MAXVEM_TEST_UTIL_HPP
#define MAXVEM_TEST_UTIL_HPP

#include <random>
#include <string>
#include <vector>

#include "maxvem/maxvem.hpp"

namespace maxvem::test
{

inline std::string data_path(const std::string &rel)
{
  return std::string(MAXVEM_TEST_DATA_DIR) + "/" + rel;
}

inline PolyMesh sample_mesh() { return load_mesh(data_path("meshes/agglomerated.pmesh")); }

struct NamedMesh
{
  std::string name;
  PolyMesh mesh;
};

// Every mesh the invariant checks run on.
inline std::vector<NamedMesh> mesh_suite()
{
  Box stretched;
  stretched.lo = Vec3(-1.0, 0.5, 2.0);
  stretched.hi = Vec3(2.0, 1.0, 2.25);
  std::vector<NamedMesh> out;
  out.push_back({"hex-1", generate_hex(1)});
  out.push_back({"hex-2", generate_hex(2)});
  out.push_back({"hex-3", generate_hex(3)});
  out.push_back({"hex-2x3x4-stretched", generate_hex({2, 3, 4}, stretched)});
  out.push_back({"tet-1", generate_tet(1)});
  out.push_back({"tet-2", generate_tet(2)});
  out.push_back({"tet-3x1x2-stretched", generate_tet({3, 1, 2}, stretched)});
  out.push_back({"agglomerated", sample_mesh()});
  return out;
}

inline Vector random_vector(int n, std::mt19937 &rng)
{
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vector v(n);
  for (int i = 0; i < n; i++)
  {
    v[i] = u(rng);
  }
  return v;
}

inline Vec3 random_vec3(std::mt19937 &rng)
{
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return Vec3(u(rng), u(rng), u(rng));
}

inline double rel_diff(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b)
{
  const double scale = std::max(a.norm(), b.norm());
  return scale == 0.0 ? 0.0 : (a - b).norm() / scale;
}

inline BlockSystem unit_system(const Discretization &d, double tau, double alpha = 1.0)
{
  return assemble_blocks(d.mesh, d.local, d.incidence,
                         PhysParams::uniform(d.mesh.num_cells(), 1.0, 1.0, 1.0, tau), alpha);
}

}  // namespace maxvem::test

#endif  // MAXVEM_TEST_UTIL_HPP
