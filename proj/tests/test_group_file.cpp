#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "tvg/constructions.hpp"
#include "tvg/errors.hpp"
#include "tvg/group_file.hpp"

using namespace tvg;

namespace {

// Y2 with the letters used in the classic table.
TwoValuedGroup lettered_Y2() {
  const auto Y = special_series(2);
  return TwoValuedGroup({"e", "x", "y", "z", "s"}, std::vector<Pair>(Y.table().begin(), Y.table().end()));
}

std::string with_table(const std::string& table) {
  return R"({"format_version": 1, "identity": "e", "elements": ["e", "a"], "table": )" + table + "}";
}

}  // namespace

TEST(GroupFile, RoundTrip) {
  for (const auto& X : {lettered_Y2(), unipotent(2), product_with_boolean(principal({6}), 1)}) {
    const std::string text = serialize_group(X);
    const auto back = parse_group(text);
    EXPECT_TRUE(back.same_table(X));
    EXPECT_TRUE(std::equal(back.names().begin(), back.names().end(), X.names().begin(), X.names().end()));
    EXPECT_EQ(serialize_group(back), text);
  }
}

TEST(GroupFile, Y2Layout) {
  const std::string text = serialize_group(lettered_Y2());
  const auto doc = nlohmann::json::parse(text);
  EXPECT_EQ(doc["format_version"], 1);
  EXPECT_EQ(doc["identity"], "e");
  ASSERT_EQ(doc["table"].size(), 5u);
  for (const auto& row : doc["table"]) EXPECT_EQ(row.size(), 5u);
  EXPECT_EQ(doc["table"][1][2], nlohmann::json({"z", "z"}));
  EXPECT_EQ(doc["table"][1][1], nlohmann::json({"e", "s"}));
  // one table row per line
  EXPECT_NE(text.find(R"([["x", "x"], ["e", "s"], ["z", "z"], ["y", "y"], ["x", "x"]])"), std::string::npos);
}

TEST(GroupFile, CanonicalizesOnRead) {
  // identity listed last, cells unsorted
  const std::string text = R"({
    "format_version": 1, "identity": "1", "elements": ["g", "1"],
    "table": [[["1", "g"], ["g", "g"]], [["g", "g"], ["1", "1"]]]
  })";
  const auto X = parse_group(text);
  EXPECT_EQ(X.name(0), "1");
  EXPECT_EQ(X.at(1, 1), Pair(0, 1));
  const std::string canon = serialize_group(X);
  EXPECT_EQ(serialize_group(parse_group(canon)), canon);
  EXPECT_NE(canon.find(R"(["1", "g"])"), std::string::npos);
}

TEST(GroupFile, Errors) {
  EXPECT_THROW(parse_group(with_table(R"([[["e","e"],["a","a"]],[["a","a"],["e","a","a"]]])")), ParseError);
  EXPECT_THROW(parse_group(with_table(R"([[["e","e"],["a","a"]],[["a","a"],["e","b"]]])")), ParseError);
  EXPECT_THROW(parse_group(with_table(R"([[["e","e"],["a","a"]]])")), NonSquareTable);
  EXPECT_THROW(parse_group(with_table(R"([[["e","e"],["a","a"]],[["a","a"]]])")), NonSquareTable);
  EXPECT_THROW(parse_group(with_table(R"([[["e","e"],["a","a"]],[["a","a"],["e",3]]])")), ParseError);
  EXPECT_THROW(parse_group(R"({"format_version": 2, "identity": "e", "elements": ["e"], "table": [[["e","e"]]]})"),
               ParseError);
  EXPECT_THROW(parse_group(R"({"format_version": 1, "identity": "e", "elements": ["e","e"], "table": []})"),
               ParseError);
  EXPECT_THROW(parse_group(R"({"format_version": 1, "identity": "q", "elements": ["e"], "table": [[["e","e"]]]})"),
               ParseError);
  EXPECT_THROW(parse_group(R"({"format_version": 1, "elements": ["e"], "table": [[["e","e"]]]})"), ParseError);
  EXPECT_THROW(parse_group("{not json"), ParseError);
  EXPECT_THROW(read_group("/nonexistent/group.json"), ParseError);
}

TEST(GroupFile, ErrorsNameTheField) {
  try {
    parse_group(with_table(R"([[["e","e"],["a","a"]],[["a","a"],["e","a","a"]]])"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("table[1][1]"), std::string::npos) << e.what();
  }
}

TEST(GroupFile, Files) {
  const auto dir = std::filesystem::temp_directory_path() / "tvg_group_file_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "y2.json").string();
  write_group(lettered_Y2(), path);
  const auto back = read_group(path);
  EXPECT_TRUE(back.same_table(lettered_Y2()));
  std::filesystem::remove_all(dir);
}
