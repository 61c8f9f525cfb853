#include "maxvem/mesh.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "maxvem/error.hpp"

namespace maxvem
{

namespace
{

void check_signed(const std::vector<SignedIndex> &refs, int bound, const char *what, int owner)
{
  if (refs.empty())
  {
    throw InvalidArgument(std::string(what) + " " + std::to_string(owner) + " is empty");
  }
  for (const auto &r : refs)
  {
    if (r.index < 0 || r.index >= bound)
    {
      throw InvalidArgument(std::string(what) + " " + std::to_string(owner) +
                            " references index " + std::to_string(r.index) +
                            " out of range [0, " + std::to_string(bound) + ")");
    }
    if (r.sign != 1 && r.sign != -1)
    {
      throw InvalidArgument(std::string(what) + " " + std::to_string(owner) +
                            " has a sign other than +1/-1");
    }
  }
}

}  // namespace

PolyMesh::PolyMesh(std::vector<Vec3> vertices, std::vector<std::array<int, 2>> edges,
                   std::vector<std::vector<SignedIndex>> faces,
                   std::vector<std::vector<SignedIndex>> cells)
  : vertices_(std::move(vertices)), edges_(std::move(edges)), faces_(std::move(faces)),
    cells_(std::move(cells))
{
  const int nv = num_vertices();
  for (int e = 0; e < num_edges(); e++)
  {
    for (int v : edges_[e])
    {
      if (v < 0 || v >= nv)
      {
        throw InvalidArgument("edge " + std::to_string(e) + " references vertex " +
                              std::to_string(v) + " out of range");
      }
    }
    if (edges_[e][0] == edges_[e][1])
    {
      throw InvalidArgument("edge " + std::to_string(e) + " is degenerate");
    }
  }
  for (int f = 0; f < num_faces(); f++)
  {
    check_signed(faces_[f], num_edges(), "face", f);
  }
  for (int c = 0; c < num_cells(); c++)
  {
    check_signed(cells_[c], num_faces(), "cell", c);
  }

  face_cells_.assign(faces_.size(), {});
  for (int c = 0; c < num_cells(); c++)
  {
    for (const auto &f : cells_[c])
    {
      face_cells_[f.index].push_back({c, f.sign});
    }
  }
  boundary_face_.assign(faces_.size(), 0);
  boundary_edge_.assign(edges_.size(), 0);
  boundary_vertex_.assign(vertices_.size(), 0);
  for (int f = 0; f < num_faces(); f++)
  {
    if (face_cells_[f].size() != 1)
    {
      continue;
    }
    boundary_face_[f] = 1;
    for (const auto &e : faces_[f])
    {
      boundary_edge_[e.index] = 1;
      boundary_vertex_[edges_[e.index][0]] = 1;
      boundary_vertex_[edges_[e.index][1]] = 1;
    }
  }
}

std::vector<int> PolyMesh::face_vertices(int f) const
{
  std::vector<int> loop;
  loop.reserve(faces_[f].size());
  for (const auto &e : faces_[f])
  {
    const auto &ev = edges_[e.index];
    loop.push_back(e.sign > 0 ? ev[0] : ev[1]);
  }
  return loop;
}

std::vector<int> PolyMesh::cell_vertices(int c) const
{
  std::vector<int> out;
  for (const auto &f : cells_[c])
  {
    for (const auto &e : faces_[f.index])
    {
      out.push_back(edges_[e.index][0]);
      out.push_back(edges_[e.index][1]);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> PolyMesh::cell_edges(int c) const
{
  std::vector<int> out;
  for (const auto &f : cells_[c])
  {
    for (const auto &e : faces_[f.index])
    {
      out.push_back(e.index);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool operator==(const PolyMesh &a, const PolyMesh &b)
{
  return a.vertices_ == b.vertices_ && a.edges_ == b.edges_ && a.faces_ == b.faces_ &&
         a.cells_ == b.cells_;
}

PolyMesh build_mesh_from_loops(std::vector<Vec3> vertices,
                               const std::vector<std::vector<std::vector<int>>> &cell_loops)
{
  std::map<std::pair<int, int>, int> edge_ids;
  std::vector<std::array<int, 2>> edges;
  std::map<std::vector<int>, int> face_ids;
  std::vector<std::vector<int>> face_loops;
  std::vector<std::vector<SignedIndex>> faces;
  std::vector<std::vector<SignedIndex>> cells;
  cells.reserve(cell_loops.size());

  auto edge_ref = [&](int a, int b) -> SignedIndex {
    const auto key = std::minmax(a, b);
    auto [it, inserted] = edge_ids.try_emplace({key.first, key.second}, (int)edges.size());
    if (inserted)
    {
      edges.push_back({key.first, key.second});
    }
    return {it->second, a < b ? 1 : -1};
  };

  // +1 when loop is a cyclic rotation of ref, -1 when it is a rotation of the reversal.
  auto orientation = [](const std::vector<int> &ref, const std::vector<int> &loop) {
    const std::size_t n = ref.size();
    const auto start = std::find(ref.begin(), ref.end(), loop[0]) - ref.begin();
    return ref[(start + 1) % n] == loop[1] ? 1 : -1;
  };

  for (const auto &loops : cell_loops)
  {
    std::vector<SignedIndex> cell;
    for (const auto &loop : loops)
    {
      std::vector<int> key(loop);
      std::sort(key.begin(), key.end());
      auto [it, inserted] = face_ids.try_emplace(key, (int)faces.size());
      if (inserted)
      {
        std::vector<SignedIndex> face;
        for (std::size_t i = 0; i < loop.size(); i++)
        {
          face.push_back(edge_ref(loop[i], loop[(i + 1) % loop.size()]));
        }
        faces.push_back(std::move(face));
        face_loops.push_back(loop);
        cell.push_back({it->second, 1});
      }
      else
      {
        cell.push_back({it->second, orientation(face_loops[it->second], loop)});
      }
    }
    cells.push_back(std::move(cell));
  }
  return PolyMesh(std::move(vertices), std::move(edges), std::move(faces), std::move(cells));
}

bool TopologyReport::passed() const
{
  return std::all_of(checks.begin(), checks.end(), [](const auto &c) { return c.passed; });
}

const TopologyCheck *TopologyReport::find(const std::string &name) const
{
  for (const auto &c : checks)
  {
    if (c.name == name)
    {
      return &c;
    }
  }
  return nullptr;
}

std::string TopologyReport::summary() const
{
  std::ostringstream os;
  for (const auto &c : checks)
  {
    os << (c.passed ? "pass " : "FAIL ") << c.name;
    if (!c.passed)
    {
      os << " (" << c.offenders.size() << " offending:";
      for (std::size_t i = 0; i < std::min<std::size_t>(c.offenders.size(), 10); i++)
      {
        os << ' ' << c.offenders[i];
      }
      os << (c.offenders.size() > 10 ? " ...)" : ")");
    }
    os << '\n';
  }
  return os.str();
}

TopologyReport validate_topology(const PolyMesh &mesh)
{
  TopologyReport report;

  // Signed edge loops must be connected head-to-tail and return to the start; the signed
  // sum of edge vectors is then zero up to rounding relative to the perimeter.
  TopologyCheck closed{"face-loop-closed", true, {}};
  for (int f = 0; f < mesh.num_faces(); f++)
  {
    const auto &loop = mesh.face(f);
    bool ok = loop.size() >= 3;
    Vec3 sum = Vec3::Zero();
    double perimeter = 0.0;
    for (std::size_t i = 0; ok && i < loop.size(); i++)
    {
      const auto &a = mesh.edge(loop[i].index);
      const auto &b = mesh.edge(loop[(i + 1) % loop.size()].index);
      const int head = loop[i].sign > 0 ? a[1] : a[0];
      const int next_tail = loop[(i + 1) % loop.size()].sign > 0 ? b[0] : b[1];
      ok = head == next_tail;
      const Vec3 d = mesh.vertex(a[1]) - mesh.vertex(a[0]);
      sum += loop[i].sign * d;
      perimeter += d.norm();
    }
    if (!ok || sum.norm() > 1e-12 * perimeter)
    {
      closed.passed = false;
      closed.offenders.push_back(f);
    }
  }
  report.checks.push_back(std::move(closed));

  // Interior faces: two cells, opposite signs. Boundary faces: one cell.
  TopologyCheck incidence{"face-cell-incidence", true, {}};
  for (int f = 0; f < mesh.num_faces(); f++)
  {
    const auto &fc = mesh.face_cells(f);
    const bool ok = fc.size() == 1 || (fc.size() == 2 && fc[0].sign == -fc[1].sign);
    if (!ok)
    {
      incidence.passed = false;
      incidence.offenders.push_back(f);
    }
  }
  report.checks.push_back(std::move(incidence));

  // Discrete boundary of boundary: within one cell every edge cancels across the signed
  // face loops.
  TopologyCheck boundary{"cell-boundary-closed", true, {}};
  TopologyCheck unique{"cell-face-unique", true, {}};
  for (int c = 0; c < mesh.num_cells(); c++)
  {
    std::map<int, int> edge_sum;
    std::map<int, int> face_count;
    for (const auto &f : mesh.cell(c))
    {
      face_count[f.index]++;
      for (const auto &e : mesh.face(f.index))
      {
        edge_sum[e.index] += f.sign * e.sign;
      }
    }
    const bool closed_ok =
      std::all_of(edge_sum.begin(), edge_sum.end(), [](const auto &kv) { return kv.second == 0; });
    if (!closed_ok)
    {
      boundary.passed = false;
      boundary.offenders.push_back(c);
    }
    const bool unique_ok = std::all_of(face_count.begin(), face_count.end(),
                                       [](const auto &kv) { return kv.second == 1; });
    if (!unique_ok)
    {
      unique.passed = false;
      unique.offenders.push_back(c);
    }
  }
  TopologyCheck edge_unique{"face-edge-unique", true, {}};
  for (int f = 0; f < mesh.num_faces(); f++)
  {
    std::vector<int> ids;
    for (const auto &e : mesh.face(f))
    {
      ids.push_back(e.index);
    }
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    {
      edge_unique.passed = false;
      edge_unique.offenders.push_back(f);
    }
  }
  report.checks.push_back(std::move(boundary));
  report.checks.push_back(std::move(unique));
  report.checks.push_back(std::move(edge_unique));
  return report;
}

}  // namespace maxvem
