#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace maxvem;

namespace
{

// Tetrahedron (0,0,0), (1,0,0), (0,1,0), (0,0,1), written by hand.
const char *kTetFile = R"(pmesh 1
# nv ne nf nc
4 6 4 1
0 0 0
1 0 0
0 1 0
0 0 1
0 1
0 2
0 3
1 2
1 3
2 3
# faces: bottom (normal -z), front (-y), left (-x), slanted
3  2 -4 -1
3  1 5 -3
3  3 -6 -2
3  4 6 -5
4  1 2 3 4
)";

int parse_error_line(const std::string &text)
{
  std::istringstream in(text);
  try
  {
    read_pmesh(in);
  }
  catch (const ParseError &e)
  {
    return e.line();
  }
  return -1;
}

std::string replace_line(const std::string &text, int line, const std::string &with)
{
  std::istringstream in(text);
  std::ostringstream out;
  std::string l;
  for (int i = 1; std::getline(in, l); i++)
  {
    out << (i == line ? with : l) << '\n';
  }
  return out.str();
}

}  // namespace

TEST(Pmesh, HandWrittenTetrahedron)
{
  std::istringstream in(kTetFile);
  const auto m = read_pmesh(in);
  EXPECT_EQ(m.num_vertices(), 4);
  EXPECT_EQ(m.num_edges(), 6);
  EXPECT_EQ(m.num_faces(), 4);
  EXPECT_EQ(m.num_cells(), 1);
  const auto report = validate_topology(m);
  EXPECT_TRUE(report.passed()) << report.summary();
  const auto g = compute_geometry(m);
  EXPECT_NEAR(g.cell_volume[0], 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(g.face_normal[0][2], -1.0, 1e-15);
}

TEST(Pmesh, RoundTripIsIdentity)
{
  for (const auto &[name, m] : test::mesh_suite())
  {
    std::stringstream buf;
    write_pmesh(m, buf);
    const auto back = read_pmesh(buf);
    EXPECT_TRUE(back == m) << name;
  }
}

TEST(Pmesh, RoundTripIsBitExactOnIrrationalCoordinates)
{
  Box box;
  box.lo = Vec3(-1.0 / 3.0, 0.1, std::sqrt(2.0));
  box.hi = Vec3(1.0 / 7.0, 0.7, 3.0 * std::sqrt(2.0));
  const auto m = generate_hex(3, box);
  std::stringstream buf;
  write_pmesh(m, buf);
  const auto back = read_pmesh(buf);
  ASSERT_EQ(back.num_vertices(), m.num_vertices());
  for (int v = 0; v < m.num_vertices(); v++)
  {
    EXPECT_EQ(back.vertex(v), m.vertex(v));
  }
}

TEST(Pmesh, SaveAndLoadFile)
{
  const auto path = std::filesystem::temp_directory_path() / "maxvem_roundtrip.pmesh";
  const auto m = generate_hex(1);
  save_mesh(m, path);
  EXPECT_TRUE(load_mesh(path) == m);
  std::filesystem::remove(path);
  EXPECT_THROW(load_mesh(path), Error);
}

TEST(Pmesh, EdgeIndexOutOfRange)
{
  // Face line 15 references edge 9 of 6.
  const auto bad = replace_line(kTetFile, 15, "3  2 -4 -9");
  EXPECT_EQ(parse_error_line(bad), 15);
}

TEST(Pmesh, ErrorsNameTheLine)
{
  EXPECT_EQ(parse_error_line(replace_line(kTetFile, 1, "pmesh 2")), 1);
  EXPECT_EQ(parse_error_line(replace_line(kTetFile, 3, "4 6 x 1")), 3);
  EXPECT_EQ(parse_error_line(replace_line(kTetFile, 5, "1 0")), 5);
  EXPECT_EQ(parse_error_line(replace_line(kTetFile, 9, "0 7")), 9);
  EXPECT_EQ(parse_error_line(replace_line(kTetFile, 15, "3  2 -4 0")), 15);
  EXPECT_EQ(parse_error_line(replace_line(kTetFile, 19, "4  1 2 3 5")), 19);
  EXPECT_EQ(parse_error_line(replace_line(kTetFile, 19, "4  1 2 3 4 7")), 19);
}

TEST(Pmesh, NonClosedFaceLoop)
{
  // Flipping one edge breaks head-to-tail connectivity of the bottom face.
  EXPECT_EQ(parse_error_line(replace_line(kTetFile, 15, "3  2 4 -1")), 15);
}

TEST(Pmesh, TruncatedAndTrailingContent)
{
  const std::string text(kTetFile);
  EXPECT_GT(parse_error_line(text.substr(0, text.find("3  4 6 -5"))), 0);
  EXPECT_EQ(parse_error_line(text + "1 2 3\n"), 20);
}

TEST(Pmesh, ShippedSampleMeshValidates)
{
  const auto m = test::sample_mesh();
  EXPECT_GT(m.num_cells(), 50);
  EXPECT_TRUE(validate_topology(m).passed());
}
