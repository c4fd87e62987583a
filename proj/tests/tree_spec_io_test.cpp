#include <gtest/gtest.h>

#include <random>

#include "chkit/tree_spec_io.hpp"
#include "trees.hpp"

namespace chkit {
namespace {

std::string error_path(std::string_view text) {
  try {
    parse_tree_spec(text);
  } catch (const TreeSpecError& e) {
    return e.path();
  }
  return "<no error>";
}

TEST(TreeSpecIo, ParsesNestedSpec) {
  const TreeSpec t = parse_tree_spec(R"({"h": 1, "children": ["leaf", "leaf", "leaf",
      {"h": 1, "children": ["leaf", "leaf", "leaf", "leaf"]}]})");
  EXPECT_EQ(leaf_count(t), 7);
  EXPECT_TRUE(t.children()[3].h() == 1);
  EXPECT_TRUE(parse_tree_spec("\"leaf\"").is_leaf());
}

TEST(TreeSpecIo, DiagnosticsNameTheNode) {
  EXPECT_EQ(error_path(R"({"h": 1, "children": ["leaf", "leaf", "leaf"]})"), "root");
  EXPECT_EQ(error_path(R"({"h": 1, "children": ["leaf", "leaf", {"h": 2, "children": ["leaf"]}, "leaf"]})"),
            "root.children[2]");
  EXPECT_EQ(error_path(R"({"h": 0, "children": ["leaf"]})"), "root");
  EXPECT_EQ(error_path(R"({"h": 1, "children": ["leaf", "leaf", "leaf", "tree"]})"), "root.children[3]");
  EXPECT_EQ(error_path(R"({"h": 1, "kids": []})"), "root");
  EXPECT_EQ(error_path(R"({"h": "1", "children": []})"), "root");
  EXPECT_EQ(error_path("{not json"), "root");
}

TEST(TreeSpecIoProperty, RoundTrip) {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    const TreeSpec t = testing_trees::random_tree(rng, 100);
    const std::string text = format_tree_spec(t);
    EXPECT_EQ(parse_tree_spec(text), t);
  }
  EXPECT_EQ(parse_tree_spec(format_tree_spec(testing_trees::mixed64())), testing_trees::mixed64());
}

}  // namespace
}  // namespace chkit
