// Writes the agglomerated polyhedral sample mesh shipped in data/meshes: a 4x4x4 grid
// with non-uniform spacing where three columns are split into triangular prisms and
// several groups of cubes are merged into boxes and L-shaped (non-convex) cells.

#include <algorithm>
#include <array>
#include <iostream>
#include <map>
#include <set>
#include <vector>

#include "maxvem/geometry.hpp"
#include "maxvem/mesh.hpp"
#include "maxvem/pmesh_io.hpp"

using maxvem::Vec3;
using Loop = std::vector<int>;

namespace
{

constexpr int N = 4;
const std::array<double, N + 1> kx{0.0, 0.2, 0.55, 0.75, 1.0};
const std::array<double, N + 1> ky{0.0, 0.3, 0.5, 0.8, 1.0};
const std::array<double, N + 1> kz{0.0, 0.25, 0.45, 0.7, 1.0};

int vid(int i, int j, int k) { return i + (N + 1) * (j + (N + 1) * k); }

void orient(std::vector<Loop> &loops, const std::vector<Vec3> &pts)
{
  Vec3 center = Vec3::Zero();
  int count = 0;
  for (const auto &l : loops)
  {
    for (int v : l)
    {
      center += pts[v];
      count++;
    }
  }
  center /= count;
  for (auto &l : loops)
  {
    Vec3 c = Vec3::Zero(), area = Vec3::Zero();
    for (std::size_t a = 0; a < l.size(); a++)
    {
      c += pts[l[a]];
      area += pts[l[a]].cross(pts[l[(a + 1) % l.size()]]);
    }
    c /= double(l.size());
    if (area.dot(c - center) < 0.0)
    {
      std::reverse(l.begin(), l.end());
    }
  }
}

std::vector<Loop> cube(int i, int j, int k, const std::vector<Vec3> &pts)
{
  auto v = [&](int a, int b, int c) { return vid(i + a, j + b, k + c); };
  std::vector<Loop> loops{
    {v(0, 0, 0), v(0, 1, 0), v(1, 1, 0), v(1, 0, 0)}, {v(0, 0, 1), v(1, 0, 1), v(1, 1, 1), v(0, 1, 1)},
    {v(0, 0, 0), v(1, 0, 0), v(1, 0, 1), v(0, 0, 1)}, {v(0, 1, 0), v(0, 1, 1), v(1, 1, 1), v(1, 1, 0)},
    {v(0, 0, 0), v(0, 0, 1), v(0, 1, 1), v(0, 1, 0)}, {v(1, 0, 0), v(1, 1, 0), v(1, 1, 1), v(1, 0, 1)},
  };
  orient(loops, pts);
  return loops;
}

// The two prisms of a cube cut by the vertical plane through (i, j) - (i+1, j+1).
std::array<std::vector<Loop>, 2> prisms(int i, int j, int k, const std::vector<Vec3> &pts)
{
  auto v = [&](int a, int b, int c) { return vid(i + a, j + b, k + c); };
  std::vector<Loop> p{
    {v(0, 0, 0), v(1, 0, 0), v(1, 1, 0)}, {v(0, 0, 1), v(1, 0, 1), v(1, 1, 1)},
    {v(0, 0, 0), v(1, 0, 0), v(1, 0, 1), v(0, 0, 1)}, {v(1, 0, 0), v(1, 1, 0), v(1, 1, 1), v(1, 0, 1)},
    {v(0, 0, 0), v(1, 1, 0), v(1, 1, 1), v(0, 0, 1)},
  };
  std::vector<Loop> q{
    {v(0, 0, 0), v(1, 1, 0), v(0, 1, 0)}, {v(0, 0, 1), v(1, 1, 1), v(0, 1, 1)},
    {v(0, 1, 0), v(1, 1, 0), v(1, 1, 1), v(0, 1, 1)}, {v(0, 0, 0), v(0, 1, 0), v(0, 1, 1), v(0, 0, 1)},
    {v(0, 0, 0), v(1, 1, 0), v(1, 1, 1), v(0, 0, 1)},
  };
  orient(p, pts);
  orient(q, pts);
  return {p, q};
}

Loop key(Loop l)
{
  std::sort(l.begin(), l.end());
  return l;
}

}  // namespace

int main(int argc, char **argv)
{
  if (argc != 2)
  {
    std::cerr << "usage: make_sample_mesh <output.pmesh>\n";
    return 2;
  }
  std::vector<Vec3> pts;
  for (int k = 0; k <= N; k++)
  {
    for (int j = 0; j <= N; j++)
    {
      for (int i = 0; i <= N; i++)
      {
        pts.emplace_back(kx[i], ky[j], kz[k]);
      }
    }
  }

  const std::set<std::array<int, 2>> prism_columns{{0, 0}, {2, 1}, {3, 3}};
  const std::vector<std::vector<std::array<int, 3>>> groups{
    {{1, 0, 0}, {2, 0, 0}},
    {{1, 2, 1}, {2, 2, 1}},
    {{3, 0, 0}, {3, 1, 0}},
    {{0, 2, 0}, {0, 2, 1}},
    {{1, 3, 2}, {1, 3, 3}},
    {{0, 1, 2}, {1, 1, 2}, {1, 2, 2}},
    {{2, 2, 3}, {2, 3, 3}, {3, 2, 3}, {2, 2, 2}},
  };
  std::map<std::array<int, 3>, int> group_of;
  for (std::size_t g = 0; g < groups.size(); g++)
  {
    for (const auto &c : groups[g])
    {
      group_of[c] = int(g);
    }
  }

  std::vector<std::vector<Loop>> cells;
  std::vector<int> emitted(groups.size(), 0);
  for (int k = 0; k < N; k++)
  {
    for (int j = 0; j < N; j++)
    {
      for (int i = 0; i < N; i++)
      {
        if (prism_columns.count({i, j}))
        {
          for (auto &p : prisms(i, j, k, pts))
          {
            cells.push_back(std::move(p));
          }
          continue;
        }
        const auto it = group_of.find({i, j, k});
        if (it == group_of.end())
        {
          cells.push_back(cube(i, j, k, pts));
          continue;
        }
        if (emitted[it->second]++)
        {
          continue;
        }
        // Union of the member cubes without the faces they share.
        std::map<Loop, int> count;
        std::vector<Loop> all;
        for (const auto &c : groups[it->second])
        {
          for (auto &l : cube(c[0], c[1], c[2], pts))
          {
            count[key(l)]++;
            all.push_back(std::move(l));
          }
        }
        std::vector<Loop> merged;
        for (auto &l : all)
        {
          if (count[key(l)] == 1)
          {
            merged.push_back(std::move(l));
          }
        }
        cells.push_back(std::move(merged));
      }
    }
  }

  const auto mesh = maxvem::build_mesh_from_loops(pts, cells);
  const auto report = maxvem::validate_topology(mesh);
  if (!report.passed())
  {
    std::cerr << report.summary();
    return 1;
  }
  maxvem::compute_geometry(mesh);
  maxvem::save_mesh(mesh, argv[1]);
  std::cout << mesh.num_vertices() << " vertices, " << mesh.num_edges() << " edges, "
            << mesh.num_faces() << " faces, " << mesh.num_cells() << " cells\n";
  return 0;
}
