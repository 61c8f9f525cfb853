#include "maxvem/vtk.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "maxvem/error.hpp"

namespace maxvem
{

std::vector<Vec3> cell_projections(const std::vector<LocalSpace> &spaces, const Vector &dofs)
{
  std::vector<Vec3> out(spaces.size());
  for (std::size_t c = 0; c < spaces.size(); c++)
  {
    const auto &sp = spaces[c];
    Vector local(sp.size());
    for (int i = 0; i < sp.size(); i++)
    {
      local[i] = dofs[sp.dofs[i]];
    }
    out[c] = sp.projection * local;
  }
  return out;
}

void write_vtk(const PolyMesh &mesh, const LocalOperators &local, const Vector &edge_dofs,
               const Vector &face_dofs, std::ostream &out)
{
  if (edge_dofs.size() != mesh.num_edges() || face_dofs.size() != mesh.num_faces())
  {
    throw InvalidArgument("vtk: DoF vectors do not match the mesh");
  }
  const auto e_proj = cell_projections(local.edge, edge_dofs);
  const auto b_proj = cell_projections(local.face, face_dofs);

  out << "# vtk DataFile Version 3.0\nmaxvem fields\nASCII\nDATASET UNSTRUCTURED_GRID\n";
  out << std::setprecision(17);
  out << "POINTS " << mesh.num_vertices() << " double\n";
  for (const auto &v : mesh.vertices())
  {
    out << v[0] << ' ' << v[1] << ' ' << v[2] << '\n';
  }

  // Polyhedron entry: size, face count, then per face its point count and point ids.
  std::vector<std::vector<int>> entries(mesh.num_cells());
  std::size_t total = 0;
  for (int c = 0; c < mesh.num_cells(); c++)
  {
    auto &entry = entries[c];
    entry.push_back(int(mesh.cell(c).size()));
    for (const auto &f : mesh.cell(c))
    {
      auto loop = mesh.face_vertices(f.index);
      if (f.sign < 0)
      {
        std::reverse(loop.begin(), loop.end());
      }
      entry.push_back(int(loop.size()));
      entry.insert(entry.end(), loop.begin(), loop.end());
    }
    total += entry.size() + 1;
  }
  out << "CELLS " << mesh.num_cells() << ' ' << total << '\n';
  for (const auto &entry : entries)
  {
    out << entry.size();
    for (int x : entry)
    {
      out << ' ' << x;
    }
    out << '\n';
  }
  out << "CELL_TYPES " << mesh.num_cells() << '\n';
  for (int c = 0; c < mesh.num_cells(); c++)
  {
    out << "42\n";
  }
  out << "CELL_DATA " << mesh.num_cells() << '\n';
  for (const auto &[name, values] : {std::pair{"E_proj", &e_proj}, std::pair{"B_proj", &b_proj}})
  {
    out << "VECTORS " << name << " double\n";
    for (const auto &v : *values)
    {
      out << v[0] << ' ' << v[1] << ' ' << v[2] << '\n';
    }
  }
  if (!out)
  {
    throw Error("vtk: write failed");
  }
}

void export_vtk(const PolyMesh &mesh, const LocalOperators &local, const Vector &edge_dofs,
                const Vector &face_dofs, const std::filesystem::path &path)
{
  std::ofstream out(path);
  if (!out)
  {
    throw Error("vtk: cannot open '" + path.string() + "' for writing");
  }
  write_vtk(mesh, local, edge_dofs, face_dofs, out);
}

}  // namespace maxvem
