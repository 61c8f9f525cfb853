#include <algorithm>
#include <array>
#include <vector>

#include "maxvem/error.hpp"
#include "maxvem/mesh.hpp"

namespace maxvem
{

namespace
{

void check_counts(const std::array<int, 3> &n, const Box &box)
{
  for (int d = 0; d < 3; d++)
  {
    if (n[d] < 1)
    {
      throw InvalidArgument("cell count per axis must be >= 1");
    }
    if (!(box.hi[d] > box.lo[d]))
    {
      throw InvalidArgument("box is degenerate along axis " + std::to_string(d));
    }
  }
}

struct Lattice
{
  std::array<int, 3> n;
  int id(int i, int j, int k) const { return i + (n[0] + 1) * (j + (n[1] + 1) * k); }
};

std::vector<Vec3> lattice_points(const std::array<int, 3> &n, const Box &box)
{
  std::vector<Vec3> pts;
  pts.reserve(std::size_t(n[0] + 1) * (n[1] + 1) * (n[2] + 1));
  for (int k = 0; k <= n[2]; k++)
  {
    for (int j = 0; j <= n[1]; j++)
    {
      for (int i = 0; i <= n[0]; i++)
      {
        const Vec3 t(double(i) / n[0], double(j) / n[1], double(k) / n[2]);
        pts.push_back(box.lo + t.cwiseProduct(box.hi - box.lo));
      }
    }
  }
  return pts;
}

// Reverses loops whose right-hand normal points toward the cell center. Only used on the
// convex cells of the structured generators.
void orient_outward(std::vector<std::vector<int>> &loops, const std::vector<Vec3> &pts)
{
  Vec3 center = Vec3::Zero();
  int count = 0;
  for (const auto &loop : loops)
  {
    for (int v : loop)
    {
      center += pts[v];
      count++;
    }
  }
  center /= count;
  for (auto &loop : loops)
  {
    Vec3 c = Vec3::Zero();
    Vec3 area = Vec3::Zero();
    for (std::size_t i = 0; i < loop.size(); i++)
    {
      c += pts[loop[i]];
      area += pts[loop[i]].cross(pts[loop[(i + 1) % loop.size()]]);
    }
    c /= double(loop.size());
    if (area.dot(c - center) < 0.0)
    {
      std::reverse(loop.begin(), loop.end());
    }
  }
}

}  // namespace

PolyMesh generate_hex(std::array<int, 3> n, const Box &box)
{
  check_counts(n, box);
  auto pts = lattice_points(n, box);
  const Lattice lat{n};
  std::vector<std::vector<std::vector<int>>> cells;
  cells.reserve(std::size_t(n[0]) * n[1] * n[2]);
  for (int k = 0; k < n[2]; k++)
  {
    for (int j = 0; j < n[1]; j++)
    {
      for (int i = 0; i < n[0]; i++)
      {
        auto v = [&](int a, int b, int c) { return lat.id(i + a, j + b, k + c); };
        std::vector<std::vector<int>> loops = {
          {v(0, 0, 0), v(0, 1, 0), v(0, 1, 1), v(0, 0, 1)},
          {v(1, 0, 0), v(1, 1, 0), v(1, 1, 1), v(1, 0, 1)},
          {v(0, 0, 0), v(0, 0, 1), v(1, 0, 1), v(1, 0, 0)},
          {v(0, 1, 0), v(0, 1, 1), v(1, 1, 1), v(1, 1, 0)},
          {v(0, 0, 0), v(1, 0, 0), v(1, 1, 0), v(0, 1, 0)},
          {v(0, 0, 1), v(1, 0, 1), v(1, 1, 1), v(0, 1, 1)},
        };
        orient_outward(loops, pts);
        cells.push_back(std::move(loops));
      }
    }
  }
  return build_mesh_from_loops(std::move(pts), cells);
}

PolyMesh generate_tet(std::array<int, 3> n, const Box &box)
{
  check_counts(n, box);
  auto pts = lattice_points(n, box);
  const Lattice lat{n};
  // Kuhn split: one tetrahedron per axis permutation, all sharing the main diagonal.
  // Face diagonals then match between neighboring cubes.
  static constexpr std::array<std::array<int, 3>, 6> perms = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
  }};
  std::vector<std::vector<std::vector<int>>> cells;
  cells.reserve(6 * std::size_t(n[0]) * n[1] * n[2]);
  for (int k = 0; k < n[2]; k++)
  {
    for (int j = 0; j < n[1]; j++)
    {
      for (int i = 0; i < n[0]; i++)
      {
        for (const auto &p : perms)
        {
          std::array<int, 3> off = {0, 0, 0};
          std::array<int, 4> tet;
          tet[0] = lat.id(i, j, k);
          for (int s = 0; s < 3; s++)
          {
            off[p[s]] = 1;
            tet[s + 1] = lat.id(i + off[0], j + off[1], k + off[2]);
          }
          std::vector<std::vector<int>> loops = {
            {tet[1], tet[2], tet[3]},
            {tet[0], tet[2], tet[3]},
            {tet[0], tet[1], tet[3]},
            {tet[0], tet[1], tet[2]},
          };
          orient_outward(loops, pts);
          cells.push_back(std::move(loops));
        }
      }
    }
  }
  return build_mesh_from_loops(std::move(pts), cells);
}

}  // namespace maxvem
