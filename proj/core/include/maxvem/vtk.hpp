#ifndef MAXVEM_VTK_HPP
#define MAXVEM_VTK_HPP

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "maxvem/mesh.hpp"
#include "maxvem/vem.hpp"

namespace maxvem
{

// Per-cell constant projections Pi0 applied to global DoF vectors of one space.
std::vector<Vec3> cell_projections(const std::vector<LocalSpace> &spaces, const Vector &dofs);

// Legacy ASCII VTK unstructured grid, every cell written as a polyhedron (type 42) with
// cell data vectors E_proj and B_proj. edge_dofs and face_dofs cover all edges and faces.
// Throws InvalidArgument on size mismatch and Error on I/O failure.
void write_vtk(const PolyMesh &mesh, const LocalOperators &local, const Vector &edge_dofs,
               const Vector &face_dofs, std::ostream &out);
void export_vtk(const PolyMesh &mesh, const LocalOperators &local, const Vector &edge_dofs,
                const Vector &face_dofs, const std::filesystem::path &path);

}  // namespace maxvem

#endif  // MAXVEM_VTK_HPP
