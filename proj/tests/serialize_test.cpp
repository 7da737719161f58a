#include <gtest/gtest.h>

#include <filesystem>
#include <regex>

#include "latrb/export.hpp"
#include "latrb/lattice_spec.hpp"
#include "latrb/serialize.hpp"

using namespace latrb;

namespace {

std::size_t count_matches(const std::string& text, const std::regex& re) {
  return static_cast<std::size_t>(
      std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

}  // namespace

TEST(LatticeJson, RoundTrip) {
  for (const char* spec : {"chain:1", "m:5", "n8", "bool:3", "prod(chain:2,chain:3)"}) {
    const auto l = builtin(spec);
    const auto back = lattice_from_json(lattice_to_json(l));
    EXPECT_EQ(back, l);
    EXPECT_TRUE(std::ranges::equal(back.labels(), l.labels()));
  }
}

TEST(LatticeJson, Format) {
  const auto j = lattice_to_json(builtin("chain:2"));
  EXPECT_EQ(j.dump(), R"({"covers":[[0,1]],"labels":["0","1"],"size":2})");
}

TEST(LatticeJson, Malformed) {
  EXPECT_THROW(lattice_from_json(json::parse("[]")), BadSpec);
  EXPECT_THROW(lattice_from_json(json::parse(R"({"covers": []})")), BadSpec);
  EXPECT_THROW(lattice_from_json(json::parse(R"({"size": 2, "covers": [[0]]})")), BadSpec);
  EXPECT_THROW(lattice_from_json(json::parse(R"({"size": "two", "covers": []})")), BadSpec);
  EXPECT_THROW(lattice_from_json(json::parse(R"({"size": 2, "covers": [[0, 1]], "labels": [1, 2]})")), BadSpec);
  EXPECT_THROW(lattice_from_json(json::parse(R"({"size": 2, "covers": [[0, 2]]})")), IndexOutOfRange);
}

TEST(MapJson, RoundTrip) {
  const auto l = builtin("chain:5");
  const auto f = make_family(l, {Family::step, 2, 1});
  EXPECT_EQ(map_to_json(f).dump(), "[1,1,1,4,4]");
  EXPECT_EQ(map_from_json(l, json::parse("[1,1,1,4,4]")), f);
  EXPECT_THROW(map_from_json(l, json::parse("[1,1]")), IndexOutOfRange);
  EXPECT_THROW(map_from_json(l, json::parse(R"({"a": 1})")), BadSpec);
}

TEST(EnumerationJson, Shape) {
  const auto l = builtin("m:5");
  const auto ops = enumerate(l, Predicate::rbo);
  const auto cls = classify(l, ops);
  const auto j = enumeration_to_json("m:5", Predicate::rbo, ops, &cls);
  EXPECT_EQ(j["lattice"], "m:5");
  EXPECT_EQ(j["predicate"], "rbo");
  EXPECT_EQ(j["count"], 19);
  EXPECT_EQ(j["operators"].size(), 19u);
  EXPECT_EQ(j["operators"][0], json::parse("[0,0,0,0,0]"));
  EXPECT_EQ(j["classification"]["class_count"], 9);
  EXPECT_EQ(j["classification"]["classes"][1]["orbit_size"], 3);
  const auto counted = enumeration_to_json("m:5", Predicate::rbo, ops, nullptr, false);
  EXPECT_FALSE(counted.contains("operators"));
  EXPECT_FALSE(counted.contains("classification"));
}

TEST(TableJson, Shape) {
  const auto l = builtin("chain:2");
  const auto t = star_table(l, LatticeMap::identity(l));
  EXPECT_EQ(table_to_json("chain:2", t).dump(), R"({"lattice":"chain:2","op":"star","table":[[0,0],[0,1]]})");
}

TEST(ExpectedValues, RoundTrip) {
  ExpectedValues ev;
  ev.values["n5|rbo"] = {27, "oracle"};
  ev.values["n8|aut"] = {2, "permutation scan"};
  const auto path = (std::filesystem::temp_directory_path() / "latrb_expected_test.json").string();
  write_expected_values(path, ev);
  const auto back = read_expected_values(path);
  EXPECT_EQ(back.version, 1);
  ASSERT_EQ(back.values.size(), 2u);
  EXPECT_EQ(back.values.at("n5|rbo").count, 27u);
  EXPECT_EQ(back.values.at("n8|aut").provenance, "permutation scan");
  std::filesystem::remove(path);
  EXPECT_THROW(read_expected_values(path), BadSpec);
  EXPECT_THROW(expected_values_from_json(json::parse(R"({"values": {}})")), BadSpec);
}

TEST(Dot, Examples) {
  const std::regex node(R"(n\d+ \[label=)");
  const std::regex edge(R"(n\d+ -> n\d+;)");
  const auto c2 = export_dot(builtin("chain:2"));
  EXPECT_EQ(count_matches(c2, node), 2u);
  EXPECT_EQ(count_matches(c2, edge), 1u);
  const auto n8 = export_dot(builtin("n8"));
  EXPECT_EQ(count_matches(n8, node), 8u);
  EXPECT_EQ(count_matches(n8, edge), 10u);
  EXPECT_NE(n8.find("n0 [label=\"0\"]"), std::string::npos);
  EXPECT_NE(n8.find("n5 -> n4;"), std::string::npos);
  const auto m5 = export_dot(builtin("m:5"));
  EXPECT_EQ(count_matches(m5, node), 5u);
  EXPECT_EQ(count_matches(m5, edge), 6u);
  EXPECT_NE(m5.find("{ rank=same; n1; n2; n3; }"), std::string::npos);
  EXPECT_EQ(export_dot(builtin("n8")), n8);
  EXPECT_EQ(c2,
            "digraph lattice {\n  rankdir=BT;\n  n0 [label=\"0\"];\n  n1 [label=\"1\"];\n  n0 -> n1;\n"
            "  { rank=same; n0; }\n  { rank=same; n1; }\n}\n");
}
