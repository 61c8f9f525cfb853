#include "maxvem/pmesh_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include "maxvem/error.hpp"

namespace maxvem
{

namespace
{

// Yields non-blank, comment-stripped lines together with their physical line number.
class LineReader
{
public:
  explicit LineReader(std::istream &in) : in_(in) {}

  std::istringstream next(const char *expecting)
  {
    std::string raw;
    while (std::getline(in_, raw))
    {
      line_++;
      if (auto hash = raw.find('#'); hash != std::string::npos)
      {
        raw.erase(hash);
      }
      if (raw.find_first_not_of(" \t\r") != std::string::npos)
      {
        return std::istringstream(raw);
      }
    }
    throw ParseError(line_ + 1, std::string("unexpected end of file, expecting ") + expecting);
  }

  int line() const { return line_; }

  bool only_blank_left()
  {
    std::string raw;
    while (std::getline(in_, raw))
    {
      line_++;
      if (auto hash = raw.find('#'); hash != std::string::npos)
      {
        raw.erase(hash);
      }
      if (raw.find_first_not_of(" \t\r") != std::string::npos)
      {
        return false;
      }
    }
    return true;
  }

private:
  std::istream &in_;
  int line_ = 0;
};

void expect_end(std::istringstream &is, int line)
{
  std::string extra;
  if (is >> extra)
  {
    throw ParseError(line, "unexpected trailing token '" + extra + "'");
  }
}

std::vector<SignedIndex> read_signed_list(std::istringstream &is, int bound, int line,
                                          const char *what)
{
  int k = 0;
  if (!(is >> k) || k < 1)
  {
    throw ParseError(line, std::string("expected a positive ") + what + " count");
  }
  std::vector<SignedIndex> refs;
  refs.reserve(k);
  for (int i = 0; i < k; i++)
  {
    long long id = 0;
    if (!(is >> id))
    {
      throw ParseError(line, std::string("expected ") + std::to_string(k) + " signed " + what +
                               " indices");
    }
    if (id == 0 || id > bound || -id > bound)
    {
      throw ParseError(line, std::string(what) + " index " + std::to_string(id) +
                               " out of range [1, " + std::to_string(bound) + "]");
    }
    refs.push_back({static_cast<int>((id > 0 ? id : -id) - 1), id > 0 ? 1 : -1});
  }
  expect_end(is, line);
  return refs;
}

}  // namespace

PolyMesh read_pmesh(std::istream &in)
{
  LineReader reader(in);
  {
    auto is = reader.next("header");
    std::string magic;
    int version = 0;
    if (!(is >> magic >> version) || magic != "pmesh" || version != 1)
    {
      throw ParseError(reader.line(), "expected header 'pmesh 1'");
    }
    expect_end(is, reader.line());
  }
  int nv = 0, ne = 0, nf = 0, nc = 0;
  {
    auto is = reader.next("entity counts");
    if (!(is >> nv >> ne >> nf >> nc) || nv < 0 || ne < 0 || nf < 0 || nc < 0)
    {
      throw ParseError(reader.line(), "malformed entity counts");
    }
    expect_end(is, reader.line());
  }

  std::vector<Vec3> vertices(nv);
  for (auto &x : vertices)
  {
    auto is = reader.next("vertex");
    if (!(is >> x[0] >> x[1] >> x[2]))
    {
      throw ParseError(reader.line(), "expected three vertex coordinates");
    }
    expect_end(is, reader.line());
  }

  std::vector<std::array<int, 2>> edges(ne);
  for (auto &e : edges)
  {
    auto is = reader.next("edge");
    if (!(is >> e[0] >> e[1]))
    {
      throw ParseError(reader.line(), "expected two vertex indices");
    }
    for (int v : e)
    {
      if (v < 0 || v >= nv)
      {
        throw ParseError(reader.line(), "vertex index " + std::to_string(v) + " out of range");
      }
    }
    if (e[0] == e[1])
    {
      throw ParseError(reader.line(), "degenerate edge");
    }
    expect_end(is, reader.line());
  }

  std::vector<std::vector<SignedIndex>> faces(nf);
  for (auto &f : faces)
  {
    auto is = reader.next("face");
    f = read_signed_list(is, ne, reader.line(), "edge");
    for (std::size_t i = 0; i < f.size(); i++)
    {
      const auto &a = edges[f[i].index];
      const auto &b = edges[f[(i + 1) % f.size()].index];
      const int head = f[i].sign > 0 ? a[1] : a[0];
      const int tail = f[(i + 1) % f.size()].sign > 0 ? b[0] : b[1];
      if (head != tail || f.size() < 3)
      {
        throw ParseError(reader.line(), "face edge loop is not closed");
      }
    }
  }

  std::vector<std::vector<SignedIndex>> cells(nc);
  for (auto &c : cells)
  {
    auto is = reader.next("cell");
    c = read_signed_list(is, nf, reader.line(), "face");
  }
  if (!reader.only_blank_left())
  {
    throw ParseError(reader.line(), "trailing content after the last cell");
  }
  return PolyMesh(std::move(vertices), std::move(edges), std::move(faces), std::move(cells));
}

void write_pmesh(const PolyMesh &mesh, std::ostream &out)
{
  out << "pmesh 1\n";
  out << mesh.num_vertices() << ' ' << mesh.num_edges() << ' ' << mesh.num_faces() << ' '
      << mesh.num_cells() << '\n';
  out << std::setprecision(17);
  for (const auto &x : mesh.vertices())
  {
    out << x[0] << ' ' << x[1] << ' ' << x[2] << '\n';
  }
  for (const auto &e : mesh.edges())
  {
    out << e[0] << ' ' << e[1] << '\n';
  }
  auto write_list = [&](const std::vector<SignedIndex> &refs) {
    out << refs.size();
    for (const auto &r : refs)
    {
      out << ' ' << (r.sign > 0 ? "" : "-") << r.index + 1;
    }
    out << '\n';
  };
  for (const auto &f : mesh.faces())
  {
    write_list(f);
  }
  for (const auto &c : mesh.cells())
  {
    write_list(c);
  }
}

PolyMesh load_mesh(const std::filesystem::path &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw Error("cannot open mesh file " + path.string());
  }
  return read_pmesh(in);
}

void save_mesh(const PolyMesh &mesh, const std::filesystem::path &path)
{
  std::ofstream out(path);
  if (!out)
  {
    throw Error("cannot write mesh file " + path.string());
  }
  write_pmesh(mesh, out);
  if (!out)
  {
    throw Error("write failed for " + path.string());
  }
}

}  // namespace maxvem
