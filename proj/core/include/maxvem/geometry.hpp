#ifndef MAXVEM_GEOMETRY_HPP
#define MAXVEM_GEOMETRY_HPP

#include <vector>

#include "maxvem/mesh.hpp"
#include "maxvem/types.hpp"

namespace maxvem
{

// Per-entity geometric quantities of a PolyMesh. Faces are assumed planar; they are
// fan-triangulated from the vertex average, which is exact for the affine integrands the
// lowest-order operators need.
struct GeometricCache
{
  std::vector<double> edge_length;
  std::vector<Vec3> edge_tangent;  // unit, from first to second vertex
  std::vector<Vec3> edge_midpoint;

  std::vector<double> face_area;
  std::vector<Vec3> face_normal;  // unit, right-hand rule on the edge loop
  std::vector<Vec3> face_barycenter;

  std::vector<double> cell_volume;
  std::vector<Vec3> cell_barycenter;
  std::vector<double> cell_diameter;

  double mesh_size = 0.0;  // max cell diameter
};

// Throws GeometryError on zero-length edges, zero-area faces, or non-positive volumes.
GeometricCache compute_geometry(const PolyMesh &mesh);

}  // namespace maxvem

#endif  // MAXVEM_GEOMETRY_HPP
