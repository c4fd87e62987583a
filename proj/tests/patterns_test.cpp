#include <gtest/gtest.h>

#include <random>

#include "chkit/extremal.hpp"
#include "chkit/patterns.hpp"
#include "oracles.hpp"

namespace chkit {
namespace {

TEST(Catalog, NamesResolve) {
  const std::vector<std::string> expected{"c3",           "i3",          "k12",         "k21",
                                          "trans-triangle", "in-pendant", "out-pendant", "twisted-circle"};
  EXPECT_EQ(patterns::names(), expected);
  for (const auto& name : expected) {
    const auto p = patterns::by_name(name);
    ASSERT_TRUE(p.has_value()) << name;
    EXPECT_EQ(p->name, name);
    EXPECT_EQ(static_cast<int>(p->vertex_names.size()), p->graph.size());
    if (name != "c3") EXPECT_TRUE(is_c3_free(p->graph)) << name;
  }
  EXPECT_FALSE(patterns::by_name("K12").has_value());
}

TEST(Catalog, EdgeSets) {
  EXPECT_EQ(patterns::in_pendant().graph, Orgraph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {3, 1}}));
  EXPECT_EQ(patterns::out_pendant().graph, Orgraph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}}));
  EXPECT_EQ(patterns::twisted_circle().graph, Orgraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  EXPECT_EQ(patterns::ch3_forbidden().size(), 3u);
}

TEST(FindInduced, SelfEmbeddingIsUnique) {
  const Pattern p = patterns::in_pendant();
  EXPECT_EQ(find_induced(p.graph, p).size(), 1u);
}

TEST(FindInduced, CirculantAvoidsForbiddenAndStars) {
  const Orgraph c2 = circulant(2);
  for (const auto& p : patterns::ch3_forbidden()) EXPECT_TRUE(find_induced(c2, p).empty()) << p.name;
  EXPECT_FALSE(contains_induced(c2, patterns::k12()));
  EXPECT_FALSE(contains_induced(c2, patterns::k21()));
}

TEST(FindInduced, MapsAreInducedEmbeddings) {
  const Orgraph g = lex_product(circulant(1), Orgraph::from_edges(2, {{0, 1}}));
  for (const auto& name : patterns::names()) {
    const auto p = *patterns::by_name(name);
    for (const auto& map : find_induced(g, p)) {
      for (int i = 0; i < p.graph.size(); ++i)
        for (int j = 0; j < p.graph.size(); ++j)
          if (i != j) EXPECT_EQ(p.graph.has_edge(i, j), g.has_edge(map[i], map[j]));
    }
  }
}

TEST(ContainsSubgraph, Examples) {
  const Orgraph tt = patterns::transitive_triangle().graph;
  EXPECT_TRUE(contains_subgraph(tt, patterns::k12()));
  EXPECT_FALSE(contains_induced(tt, patterns::k12()));
  EXPECT_FALSE(contains_subgraph(circulant(1), patterns::twisted_circle()));
  EXPECT_TRUE(contains_subgraph(patterns::twisted_circle().graph, patterns::path3()));
}

TEST(IsPatternFree, Examples) {
  const auto forbidden = patterns::ch3_forbidden();
  for (int h = 1; h <= 3; ++h) EXPECT_TRUE(is_pattern_free(circulant(h), forbidden, true)) << h;
  EXPECT_FALSE(is_pattern_free(patterns::in_pendant().graph, forbidden, true));
  EXPECT_TRUE(is_pattern_free(Orgraph(6), forbidden, true));
}

TEST(Catalog, ForbiddenPatternsContainAStar) {
  for (const auto& p : patterns::ch3_forbidden()) {
    EXPECT_TRUE(is_c3_free(p.graph));
    EXPECT_TRUE(contains_induced(p.graph, patterns::k12()) || contains_induced(p.graph, patterns::k21())) << p.name;
  }
  EXPECT_TRUE(contains_induced(patterns::in_pendant().graph, patterns::k21()));
  EXPECT_TRUE(contains_induced(patterns::out_pendant().graph, patterns::k12()));
  EXPECT_TRUE(contains_induced(patterns::twisted_circle().graph, patterns::k12()));
  EXPECT_TRUE(contains_induced(patterns::twisted_circle().graph, patterns::k21()));
}

// ---- properties -------------------------------------------------------------

std::vector<std::vector<int>> image_sets(const std::vector<VertexMap>& maps) {
  std::vector<std::vector<int>> out;
  for (auto m : maps) {
    std::sort(m.begin(), m.end());
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(PatternProperty, MatcherAgreesWithSubsetScan) {
  std::mt19937 rng(31);
  std::vector<Pattern> all;
  for (const auto& name : patterns::names()) all.push_back(*patterns::by_name(name));
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 3 + trial % 6;  // up to 8 vertices
    const Orgraph g = oracle::random_c3_free(n, 0.3 + 0.1 * (trial % 5), rng);
    for (const auto& p : all) {
      const auto expect_induced = oracle::copy_sets(g, p.graph, true);
      EXPECT_EQ(image_sets(find_induced(g, p)), expect_induced) << p.name << "\n";
      EXPECT_EQ(contains_induced(g, p), !expect_induced.empty());
      EXPECT_EQ(contains_subgraph(g, p), !oracle::copy_sets(g, p.graph, false).empty()) << p.name;
    }
  }
}

TEST(PatternProperty, InducedImpliesSubgraph) {
  std::mt19937 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const Orgraph g = oracle::random_c3_free(4 + trial % 5, 0.5, rng);
    for (const auto& name : patterns::names()) {
      const auto p = *patterns::by_name(name);
      if (contains_induced(g, p)) EXPECT_TRUE(contains_subgraph(g, p)) << name;
    }
  }
}

}  // namespace
}  // namespace chkit
