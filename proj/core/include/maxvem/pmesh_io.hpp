#ifndef MAXVEM_PMESH_IO_HPP
#define MAXVEM_PMESH_IO_HPP

#include <filesystem>
#include <iosfwd>

#include "maxvem/mesh.hpp"

namespace maxvem
{

// PMESH text format, '#' starts a comment:
//
//   pmesh 1
//   <nv> <ne> <nf> <nc>
//   x y z                      (nv lines)
//   v1 v2                      (ne lines, 0-based vertex indices)
//   k  s1*e1 ... sk*ek         (nf lines, signed 1-based edge indices)
//   k  s1*f1 ... sk*fk         (nc lines, signed 1-based face indices, + is outward)
//
// Coordinates are written with 17 significant digits so a save/load cycle is bit-exact.
// Errors throw ParseError carrying the line number.
PolyMesh read_pmesh(std::istream &in);
void write_pmesh(const PolyMesh &mesh, std::ostream &out);

PolyMesh load_mesh(const std::filesystem::path &path);
void save_mesh(const PolyMesh &mesh, const std::filesystem::path &path);

}  // namespace maxvem

#endif  // MAXVEM_PMESH_IO_HPP
