#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "jordan/constructors.hpp"
#include "jordan/io.hpp"

using namespace jordan;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("jordan_io_" + name)).string();
}

std::string header(const std::string& kind, std::size_t dim) {
  return "{\"kind\": \"" + kind + "\", \"dim\": " + std::to_string(dim) + ", ";
}

}  // namespace

TEST(Serialize, SpinRoundTrip) {
  auto j = spin_factor({1, 1});
  auto path = temp_path("spin11.json");
  save_algebra(path, j);
  auto loaded = load_algebra(path);
  ASSERT_TRUE(std::holds_alternative<JordanAlgebra>(loaded));
  EXPECT_EQ(std::get<JordanAlgebra>(loaded).table(), j.table());
  std::remove(path.c_str());
}

TEST(Serialize, ExactTextForSmallAlgebra) {
  std::string expected =
      "{\n"
      "  \"kind\": \"jordan\",\n"
      "  \"dim\": 2,\n"
      "  \"basis_names\": [\"e\",\"v\"],\n"
      "  \"table\": [\n"
      "    [[[0,\"1\"]],[[1,\"1/2\"]]],\n"
      "    [[[1,\"1/2\"]],[]]\n"
      "  ]\n"
      "}\n";
  EXPECT_EQ(serialize(halfspin_fixture()), expected);
}

TEST(Serialize, ByteStableAndRoundTripsEveryConstructor) {
  std::vector<AnyAlgebra> algebras{spin_factor({2, make_scalar(-3, 7)}), nilpotent_fixture(), halfspin_fixture(),
                                   full_matrix_jordan(2).first, hermitian_jordan(3).first, albert_algebra(),
                                   so_alpha(4, {1, 2, 3, 4}), assoc_lie(2), skew_lie(3), LieTable(StructureTable(0))};
  for (const auto& a : algebras) {
    auto text = serialize(a);
    EXPECT_EQ(text, serialize(a));
    auto back = parse_algebra(text);
    EXPECT_EQ(back.index(), a.index());
    EXPECT_EQ(serialize(back), text);
  }
}

TEST(Parse, LieKind) {
  auto l = parse_algebra(serialize(so_alpha(3, {1, 1, 1})));
  ASSERT_TRUE(std::holds_alternative<LieTable>(l));
  EXPECT_EQ(std::get<LieTable>(l).dim(), 3u);
}

TEST(Parse, NilpotentFilePassesValidation) {
  std::string text = header("jordan", 2) +
                     "\"table\": [[[[0, \"1\"], [1, \"1\"]], [[0, \"-1\"], [1, \"-1\"]]],"
                     " [[[0, \"-1\"], [1, \"-1\"]], [[0, \"1\"], [1, \"1\"]]]]}";
  auto a = parse_algebra(text);
  ASSERT_TRUE(std::holds_alternative<JordanAlgebra>(a));
  EXPECT_TRUE(std::get<JordanAlgebra>(a).jordan_checked());
  EXPECT_EQ(std::get<JordanAlgebra>(a).table(), nilpotent_fixture().table());
}

TEST(Parse, NonCommutativeRejectedWithIndices) {
  std::string text = header("jordan", 2) + "\"table\": [[[], [[0, \"1\"]]], [[], []]]}";
  try {
    parse_algebra(text);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.kind, ViolationKind::NotCommutative);
    EXPECT_EQ(e.indices, (std::vector<std::size_t>{0, 1}));
  }
}

TEST(Parse, NonJacobiRejected) {
  std::string text = header("lie", 3) +
                     "\"table\": [[[], [[2, \"1\"]], [[0, \"1\"]]],"
                     " [[[2, \"-1\"]], [], [[2, \"1\"]]],"
                     " [[[0, \"-1\"]], [[2, \"-1\"]], []]]}";
  try {
    parse_algebra(text);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.kind, ViolationKind::NotJacobi);
  }
}

TEST(Parse, RejectsMalformedInput) {
  const std::string good_cell = "[[[[0, \"1\"]]]]}";
  EXPECT_THROW(parse_algebra("not json"), ParseError);
  EXPECT_THROW(parse_algebra("[]"), ParseError);
  EXPECT_THROW(parse_algebra(header("jordan", 1) + "\"table\": [[[[0, 0.5]]]]}"), ParseError);
  EXPECT_THROW(parse_algebra(header("jordan", 1) + "\"table\": [[[[0, 1]]]]}"), ParseError);
  EXPECT_THROW(parse_algebra(header("jordan", 1) + "\"table\": [[[[0, \"0.5\"]]]]}"), ParseError);
  EXPECT_THROW(parse_algebra(header("jordan", 1) + "\"table\": [[[[1, \"1\"]]]]}"), ParseError);
  EXPECT_THROW(parse_algebra(header("jordan", 1) + "\"table\": [[[[0, \"1\"], [0, \"2\"]]]]}"), ParseError);
  EXPECT_THROW(parse_algebra(header("jordan", 1) + "\"table\": [[[[0, \"1/0\"]]]]}"), ParseError);
  EXPECT_THROW(parse_algebra(header("jordan", 2) + "\"table\": " + good_cell), ParseError);
  EXPECT_THROW(parse_algebra(header("octonion", 1) + "\"table\": " + good_cell), ParseError);
  EXPECT_THROW(parse_algebra("{\"kind\": \"jordan\", \"dim\": -1, \"table\": []}"), ParseError);
  EXPECT_THROW(parse_algebra("{\"kind\": \"jordan\", \"dim\": 1}"), ParseError);
  EXPECT_THROW(parse_algebra(header("jordan", 1) + "\"basis_names\": [\"a\", \"b\"], \"table\": " + good_cell), ParseError);
  EXPECT_THROW(load_algebra(temp_path("missing.json")), ParseError);
}

TEST(Parse, AcceptsNonCanonicalRationalsAndMissingNames) {
  auto a = parse_algebra(header("jordan", 1) + "\"table\": [[[[0, \"2/2\"]]]]}");
  const auto& j = std::get<JordanAlgebra>(a);
  EXPECT_EQ(j.table().at(0, 0, 0), Scalar(1));
  EXPECT_EQ(j.table().basis_names(), std::vector<std::string>{"e1"});
  EXPECT_NE(serialize(a).find("\"1\""), std::string::npos);
}
