#ifndef MAXVEM_MESH_HPP
#define MAXVEM_MESH_HPP

#include <array>
#include <string>
#include <vector>

#include "maxvem/types.hpp"

namespace maxvem
{

//
// Oriented polyhedral mesh complex.
//
// Edges are directed from their first to their second vertex. A face is a closed loop of
// signed edges; the traversal is counterclockwise about the face normal n_F, so the normal
// is fixed by the loop. A cell is a set of signed faces, +1 when n_F points out of the cell.
// Boundary flags and the face-to-cell incidence are derived at construction.
//
class PolyMesh
{
public:
  PolyMesh() = default;

  // Throws InvalidArgument on out-of-range indices, zero signs, or empty loops. Orientation
  // and closure are not checked here; see validate_topology().
  PolyMesh(std::vector<Vec3> vertices, std::vector<std::array<int, 2>> edges,
           std::vector<std::vector<SignedIndex>> faces,
           std::vector<std::vector<SignedIndex>> cells);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  int num_cells() const { return static_cast<int>(cells_.size()); }

  const std::vector<Vec3> &vertices() const { return vertices_; }
  const std::vector<std::array<int, 2>> &edges() const { return edges_; }
  const std::vector<std::vector<SignedIndex>> &faces() const { return faces_; }
  const std::vector<std::vector<SignedIndex>> &cells() const { return cells_; }

  const Vec3 &vertex(int v) const { return vertices_[v]; }
  const std::array<int, 2> &edge(int e) const { return edges_[e]; }
  const std::vector<SignedIndex> &face(int f) const { return faces_[f]; }
  const std::vector<SignedIndex> &cell(int c) const { return cells_[c]; }

  // Cells adjacent to a face, with the sign the face carries in each of them.
  const std::vector<SignedIndex> &face_cells(int f) const { return face_cells_[f]; }

  bool is_boundary_face(int f) const { return boundary_face_[f] != 0; }
  bool is_boundary_edge(int e) const { return boundary_edge_[e] != 0; }
  bool is_boundary_vertex(int v) const { return boundary_vertex_[v] != 0; }

  // Vertex sequence of the face in traversal order (tail of each signed edge).
  std::vector<int> face_vertices(int f) const;

  // Sorted, unique vertices of a cell.
  std::vector<int> cell_vertices(int c) const;

  // Sorted, unique edges of a cell.
  std::vector<int> cell_edges(int c) const;

  // Total number of edge and face unknowns, boundary ones included.
  int total_dofs() const { return num_edges() + num_faces(); }

  friend bool operator==(const PolyMesh &a, const PolyMesh &b);

private:
  std::vector<Vec3> vertices_;
  std::vector<std::array<int, 2>> edges_;
  std::vector<std::vector<SignedIndex>> faces_;
  std::vector<std::vector<SignedIndex>> cells_;

  std::vector<std::vector<SignedIndex>> face_cells_;
  std::vector<char> boundary_face_, boundary_edge_, boundary_vertex_;
};

// Builds a mesh from cells described by vertex loops, each loop oriented so that its
// right-hand normal points out of the cell. Edges are deduplicated and directed from the
// lower to the higher vertex index; faces are deduplicated by vertex set and keep the
// orientation of their first occurrence. Unreferenced vertices are kept.
PolyMesh build_mesh_from_loops(std::vector<Vec3> vertices,
                               const std::vector<std::vector<std::vector<int>>> &cell_loops);

// Structured n[0] x n[1] x n[2] cube mesh of the box.
PolyMesh generate_hex(std::array<int, 3> n, const Box &box = {});
inline PolyMesh generate_hex(int n, const Box &box = {}) { return generate_hex({n, n, n}, box); }

// Structured cube mesh with every cube split into 6 tetrahedra around its main diagonal.
PolyMesh generate_tet(std::array<int, 3> n, const Box &box = {});
inline PolyMesh generate_tet(int n, const Box &box = {}) { return generate_tet({n, n, n}, box); }

//
// Topology diagnostics. Every invariant of PolyMesh gets one check; failing checks list
// the offending entity indices.
//
struct TopologyCheck
{
  std::string name;
  bool passed = true;
  std::vector<int> offenders;
};

struct TopologyReport
{
  std::vector<TopologyCheck> checks;

  bool passed() const;
  const TopologyCheck *find(const std::string &name) const;
  std::string summary() const;
};

// Check names: "face-loop-closed", "face-cell-incidence", "cell-boundary-closed",
// "cell-face-unique", "face-edge-unique".
TopologyReport validate_topology(const PolyMesh &mesh);

}  // namespace maxvem

#endif  // MAXVEM_MESH_HPP
