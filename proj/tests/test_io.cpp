#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "lscat/cohomology.hpp"
#include "lscat/error.hpp"
#include "lscat/io.hpp"

using namespace lscat;

namespace {

std::string field_of(const std::string& text) {
  try {
    parse_space_json(text);
  } catch (const ParseError&) {
    return "<parse>";
  } catch (const InputError& e) {
    return e.field();
  }
  return "<none>";
}

std::string complex_field_of(const std::string& text) {
  try {
    parse_complex_json(text);
  } catch (const ParseError&) {
    return "<parse>";
  } catch (const InputError& e) {
    return e.field();
  }
  return "<none>";
}

}  // namespace

TEST(SpaceJson, ParsesPointsAndOrder) {
  const FinSpace s = parse_space_json(R"({"points": ["a", "b", "c", "d"],
    "order": [["c", "a"], ["c", "b"], ["d", "a"], ["d", "b"]]})");
  EXPECT_TRUE(s == *builtin_space("circle4"));
  const FinSpace n = parse_space_json(R"({"points": [1, 2], "order": [[1, 2]]})");
  EXPECT_EQ(n.label(0), "1");
  EXPECT_TRUE(n.leq(0, 1));
}

TEST(SpaceJson, ReportsOffendingField) {
  EXPECT_EQ(field_of(R"({"order": []})"), "points");
  EXPECT_EQ(field_of(R"({"points": ["a"]})"), "<none>");
  EXPECT_EQ(field_of(R"({"points": ["a"], "order": {}})"), "order");
  EXPECT_EQ(field_of(R"({"points": ["a", null], "order": []})"), "points[1]");
  EXPECT_EQ(field_of(R"({"points": ["a", "b"], "order": [["a"]]})"), "order[0]");
  EXPECT_EQ(field_of(R"({"points": ["a", "b"], "order": [["a", "b"], ["z", "a"]]})"), "order[1][0]");
  EXPECT_NE(field_of(R"({"points": ["a", "b"], "order": [["a", "b"], ["b", "a"]]})"), "<none>");
  EXPECT_EQ(field_of(R"([1, 2])"), "$");
}

TEST(SpaceJson, SyntaxErrorsCarryPosition) {
  try {
    parse_space_json("{\n  \"points\": [\"a\",\n  ,\n}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_GE(e.column(), 1u);
  }
}

TEST(ComplexJson, ParsesAndNumbersByFirstAppearance) {
  const SimplicialComplex k = parse_complex_json(R"({"maximal_faces": [[7, 3, 5], [3, 9]]})");
  EXPECT_EQ(k.vertex_count(), 4);
  EXPECT_EQ(k.dimension(), 2);
  EXPECT_EQ(k.count(1), 4u);
  EXPECT_EQ(complex_field_of(R"({"faces": []})"), "maximal_faces");
  EXPECT_EQ(complex_field_of(R"({"maximal_faces": [[1, 2], [3, null]]})"), "maximal_faces[1][1]");
  EXPECT_EQ(complex_field_of(R"({"maximal_faces": [[1, 1]]})"), "maximal_faces[0][1]");
}

TEST(DataFiles, SurfacesLoad) {
  const CohomologyRing rp2(load_complex("rp2_6"));
  EXPECT_EQ(rp2.betti_numbers(), (std::vector<int>{1, 1, 1}));
  const CohomologyRing torus(load_complex("torus7"));
  EXPECT_EQ(torus.betti_numbers(), (std::vector<int>{1, 2, 1}));
}

TEST(DataFiles, EnvironmentOverridesDirectory) {
  const auto dir = std::filesystem::temp_directory_path() / "lscat_io_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "rp2_6.json") << R"({"maximal_faces": [[1, 2], [2, 3], [1, 3]]})";
  ::setenv("LSCAT_DATA_DIR", dir.c_str(), 1);
  EXPECT_EQ(data_dir(), dir.string());
  EXPECT_EQ(load_complex("rp2_6").vertex_count(), 3);
  ::unsetenv("LSCAT_DATA_DIR");
  EXPECT_EQ(load_complex("rp2_6").vertex_count(), 6);
  std::filesystem::remove_all(dir);
}

TEST(LoadSpace, BuiltinsAndFiles) {
  EXPECT_EQ(load_space("chain(3)").size(), 3);
  const auto path = std::filesystem::temp_directory_path() / "lscat_space.json";
  std::ofstream(path) << R"({"points": ["p", "q"], "order": []})";
  EXPECT_EQ(load_space(path.string()).size(), 2);
  std::filesystem::remove(path);
  EXPECT_THROW(load_space("no_such_space"), InputError);
  EXPECT_THROW(load_space("/nonexistent/x.json"), InputError);
}
