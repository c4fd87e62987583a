#include <gtest/gtest.h>

#include <random>

#include "chkit/extremal.hpp"
#include "chkit/flags.hpp"
#include "oracles.hpp"

namespace chkit {
namespace {

using V = std::vector<int>;

FlagError::Kind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const FlagError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected FlagError";
  return FlagError::Kind::kInvalidFlag;
}

TEST(Types, BuiltIns) {
  EXPECT_EQ(types::empty().size(), 0);
  EXPECT_EQ(types::vertex().size(), 1);
  EXPECT_TRUE(types::arc().graph().has_edge(0, 1));
  EXPECT_EQ(types::independent().graph().edge_count(), 0);
  EXPECT_EQ(types::path().graph(), Orgraph::from_edges(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(kind_of([] { TypeSpec("bad", Orgraph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}})); }),
            FlagError::Kind::kInvalidType);
}

TEST(Flags, CatalogShapes) {
  EXPECT_EQ(flags::names().size(), 9u);
  for (const auto& name : flags::names()) {
    const auto f = flags::by_name(name);
    ASSERT_TRUE(f) << name;
    EXPECT_EQ(f->name(), name);
    EXPECT_EQ(f->size(), f->type().size() + (name == "ohat_a" ? 2 : 1)) << name;
    EXPECT_FALSE(f->note().empty()) << name;
  }
  EXPECT_FALSE(flags::by_name("O_A"));
}

TEST(Flags, ConstructionRejectsBadTheta) {
  EXPECT_EQ(kind_of([] { Flag("f", types::arc(), Orgraph(3), {0, 1}); }), FlagError::Kind::kInvalidFlag);
  EXPECT_EQ(kind_of([] { Flag("f", types::arc(), Orgraph::from_edges(3, {{0, 1}}), {0, 0}); }),
            FlagError::Kind::kInvalidFlag);
  EXPECT_EQ(kind_of([] { Flag("f", types::arc(), Orgraph::from_edges(3, {{0, 1}}), {0}); }),
            FlagError::Kind::kInvalidFlag);
}

TEST(Density, Identity) { EXPECT_EQ(density(flags::alpha(), flags::alpha()), Rational(1)); }

TEST(Density, Errors) {
  EXPECT_EQ(kind_of([] { density(flags::alpha(), flags::o_a()); }), FlagError::Kind::kTypeMismatch);
  EXPECT_EQ(kind_of([] { density(flags::ohat_a(), flags::o_a()); }), FlagError::Kind::kEmptySampleSpace);
  const Orgraph c3 = Orgraph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(kind_of([&] { relative_density(flags::alpha(), c3, V{0}); }), FlagError::Kind::kNotC3Free);
  const Orgraph c4 = circulant(1);
  EXPECT_EQ(kind_of([&] { relative_density(flags::o_a(), c4, V{1, 0}); }),
            FlagError::Kind::kLabelsDoNotInduceType);
  EXPECT_EQ(kind_of([&] { relative_density(flags::o_a(), c4, V{0, 0}); }), FlagError::Kind::kBadLabels);
  EXPECT_EQ(kind_of([&] { relative_density(flags::o_a(), c4, V{0}); }), FlagError::Kind::kBadLabels);
  EXPECT_EQ(kind_of([&] { relative_density(flags::alpha(), Orgraph(1), V{0}); }),
            FlagError::Kind::kEmptySampleSpace);
  EXPECT_EQ(kind_of([&] { restricted_density(flags::ohat_a(), c4, V{0, 1}, V{}); }),
            FlagError::Kind::kNotSingleFreeVertex);
  EXPECT_EQ(kind_of([&] { restricted_density(flags::o_a(), c4, V{0, 1}, V{0}); }), FlagError::Kind::kBadLabels);
  EXPECT_EQ(kind_of([&] { restricted_density(flags::o_a(), c4, V{0, 1}, V{2, 3}); }),
            FlagError::Kind::kEmptySampleSpace);
}

TEST(Density, CirculantExamples) {
  const Orgraph c4 = circulant(1);
  EXPECT_EQ(relative_density(flags::o_a(), c4, V{0, 1}), Rational(0));
  EXPECT_EQ(relative_density(flags::p3_a(), c4, V{0, 1}), Rational(1, 2));
  const Orgraph c7 = circulant(2);
  EXPECT_EQ(relative_density(flags::o_a(), c7, V{0, 1}), Rational(1, 5));
  EXPECT_EQ(restricted_density(flags::o_a(), c7, V{0, 1}, V{2}), Rational(0));
  EXPECT_EQ(restricted_density(flags::o_a(), c7, V{0, 1}, V{}), Rational(1, 5));
}

TEST(Density, FlagInFlag) {
  // O_A inside the 4-vertex flag obtained from O_P by forgetting label 3.
  const Flag big("op_as_a", types::arc(), Orgraph::from_edges(4, {{0, 1}, {1, 2}, {0, 3}, {1, 3}, {2, 3}}), {0, 1});
  EXPECT_EQ(density(flags::o_a(), big), Rational(1, 2));
  EXPECT_EQ(density(flags::p3_a(), big), Rational(1, 2));
  EXPECT_EQ(density(flags::ohat_a(), big), Rational(1));
}

TEST(Normalization, Examples) {
  const Orgraph c7 = circulant(2);
  EXPECT_TRUE(check_normalization(c7, types::arc(), V{0, 1}, 3));
  EXPECT_TRUE(check_normalization(c7, types::vertex(), V{4}, 2));
  EXPECT_TRUE(check_normalization(c7, types::independent(), V{0, 3}, 3));
  EXPECT_EQ(flags_of_type(types::vertex(), 2).size(), 3u);
}

TEST(Normalization, FlagCountsPerType) {
  // One free vertex, three relations to each label, minus C3 closures.
  EXPECT_EQ(flags_of_type(types::arc(), 3).size(), 8u);
  EXPECT_EQ(flags_of_type(types::independent(), 3).size(), 9u);
  EXPECT_EQ(flags_of_type(types::path(), 4).size(), 21u);
}

TEST(FlagsIsomorphic, RespectsLabels) {
  const Flag a("a", types::independent(), Orgraph::from_edges(3, {{0, 2}}), {0, 1});
  const Flag b("b", types::independent(), Orgraph::from_edges(3, {{1, 2}}), {0, 1});
  const Flag c("c", types::independent(), Orgraph::from_edges(3, {{2, 1}}), {1, 0});
  EXPECT_FALSE(flags_isomorphic(a, b));
  EXPECT_FALSE(flags_isomorphic(a, c));
  const Flag d("d", types::independent(), Orgraph::from_edges(3, {{1, 0}}), {1, 2});
  EXPECT_TRUE(flags_isomorphic(a, d));
}

// ---- properties -------------------------------------------------------------

std::vector<Orgraph> corpus(unsigned seed, int count, int n_max) {
  std::mt19937 rng(seed);
  std::vector<Orgraph> out;
  for (int i = 0; i < count; ++i) out.push_back(oracle::random_c3_free(3 + i % (n_max - 2), 0.3 + 0.15 * (i % 4), rng));
  return out;
}

// Every label tuple of g inducing sigma.
std::vector<V> label_tuples(const Orgraph& g, const TypeSpec& sigma) {
  std::vector<V> out;
  const int k = sigma.size();
  V cur;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v < g.size(); ++v) {
      if (std::find(cur.begin(), cur.end(), v) != cur.end()) continue;
      bool ok = true;
      const int i = static_cast<int>(cur.size());
      for (int j = 0; j < i && ok; ++j)
        ok = sigma.graph().has_edge(j, i) == g.has_edge(cur[j], v) && sigma.graph().has_edge(i, j) == g.has_edge(v, cur[j]);
      if (!ok) continue;
      cur.push_back(v);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

TEST(FlagProperty, DensityMatchesSubsetOracle) {
  for (const auto& g : corpus(41, 60, 9)) {
    for (const auto& name : flags::names()) {
      const Flag f = *flags::by_name(name);
      for (const auto& labels : label_tuples(g, f.type())) {
        if (g.size() - f.type().size() < f.size() - f.type().size()) continue;
        EXPECT_EQ(relative_density(f, g, labels), oracle::density(f, g, labels)) << name;
      }
    }
  }
}

TEST(FlagProperty, RestrictedDensityMatchesOracle) {
  std::mt19937 rng(42);
  for (const auto& g : corpus(43, 60, 10)) {
    for (const auto& name : flags::names()) {
      const Flag f = *flags::by_name(name);
      if (f.size() != f.type().size() + 1) continue;
      for (const auto& labels : label_tuples(g, f.type())) {
        V excluded;
        for (int v = 0; v < g.size(); ++v)
          if (std::find(labels.begin(), labels.end(), v) == labels.end() && rng() % 3 == 0) excluded.push_back(v);
        if (static_cast<int>(labels.size() + excluded.size()) >= g.size()) continue;
        EXPECT_EQ(restricted_density(f, g, labels, excluded), oracle::density(f, g, labels, excluded)) << name;
      }
    }
  }
}

TEST(FlagProperty, AlphaIsNormalizedOutDegree) {
  for (const auto& g : corpus(44, 50, 10))
    for (int v = 0; v < g.size(); ++v)
      EXPECT_EQ(relative_density(flags::alpha(), g, V{v}), Rational(g.out_degree(v), g.size() - 1));
}

TEST(FlagProperty, Normalization) {
  const std::vector<TypeSpec> sigmas{types::vertex(), types::arc(), types::independent(), types::path()};
  for (const auto& g : corpus(45, 40, 10))
    for (const auto& sigma : sigmas)
      for (const auto& labels : label_tuples(g, sigma)) {
        if (g.size() <= sigma.size()) continue;
        EXPECT_TRUE(check_normalization(g, sigma, labels, sigma.size() + 1)) << sigma.name();
      }
}

TEST(FlagProperty, AlphaDecomposesAlongEdges) {
  for (const auto& g : corpus(46, 60, 10)) {
    const int n = g.size();
    for (const auto& [v, w] : g.edges()) {
      const V vw{v, w};
      const Rational rhs = Rational(n - 2, n - 1) *
                           (relative_density(flags::o_a(), g, vw) + relative_density(flags::p3_a(), g, vw));
      EXPECT_EQ(relative_density(flags::alpha(), g, V{w}), rhs);
    }
  }
}

TEST(FlagProperty, LiftIdentities) {
  int triples = 0;
  for (const auto& g : corpus(47, 80, 10)) {
    const int n = g.size();
    if (n < 4) continue;
    for (int v = 0; v < n; ++v) {
      g.in_neighbors(v).for_each([&](int u) {
        g.out_neighbors(v).for_each([&](int w) {
          if (!g.independent(u, w)) return;
          ++triples;
          const Rational a(n - 3, n - 1), b(1, n - 1), c(n - 3, n - 2), d(1, n - 2);
          EXPECT_EQ(relative_density(flags::alpha(), g, V{u}),
                    a * restricted_density(flags::alpha(), g, V{u}, V{v, w}) + b);
          EXPECT_EQ(relative_density(flags::alpha(), g, V{v}),
                    a * restricted_density(flags::alpha(), g, V{v}, V{u, w}) + b);
          EXPECT_EQ(relative_density(flags::alpha(), g, V{w}),
                    a * restricted_density(flags::alpha(), g, V{w}, V{u, v}));
          EXPECT_EQ(relative_density(flags::p3_n(), g, V{u, w}),
                    c * restricted_density(flags::p3_n(), g, V{u, w}, V{v}) + d);
          for (const auto& f : {flags::o_a(), flags::i_a(), flags::k21_a()}) {
            EXPECT_EQ(relative_density(f, g, V{u, v}), c * restricted_density(f, g, V{u, v}, V{w})) << f.name();
            EXPECT_EQ(relative_density(f, g, V{v, w}), c * restricted_density(f, g, V{v, w}, V{u})) << f.name();
          }
        });
      });
    }
  }
  EXPECT_GT(triples, 100);
}

}  // namespace
}  // namespace chkit
