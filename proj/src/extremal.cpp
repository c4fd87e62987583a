#include "chkit/extremal.hpp"

#include <algorithm>

namespace chkit {
namespace {

void validate_at(const TreeSpec& node, const std::string& path) {
  if (node.is_leaf()) return;
  if (node.h() < 1) throw TreeSpecError(path, "h must be >= 1, got " + std::to_string(node.h()));
  const auto expected = static_cast<std::size_t>(3 * node.h() + 1);
  if (node.children().size() != expected) {
    throw TreeSpecError(path, "h=" + std::to_string(node.h()) + " requires " + std::to_string(expected) +
                                  " children, got " + std::to_string(node.children().size()));
  }
  for (std::size_t i = 0; i < node.children().size(); ++i) {
    validate_at(node.children()[i], path + ".children[" + std::to_string(i) + "]");
  }
}

struct LeafInfo {
  std::vector<int> path;  // child index at each ancestor
  std::vector<int> hs;    // h at each ancestor
  Rational weight{1};
};

void collect_leaves(const TreeSpec& node, LeafInfo& current, std::vector<LeafInfo>& out) {
  if (node.is_leaf()) {
    out.push_back(current);
    return;
  }
  const int width = 3 * node.h() + 1;
  for (int i = 0; i < width; ++i) {
    current.path.push_back(i);
    current.hs.push_back(node.h());
    const Rational saved = current.weight;
    current.weight /= width;
    collect_leaves(node.children()[i], current, out);
    current.weight = saved;
    current.hs.pop_back();
    current.path.pop_back();
  }
}

bool circulant_edge(int i, int j, int h) {
  const int n = 3 * h + 1;
  const int d = ((j - i) % n + n) % n;
  return d >= 1 && d <= h;
}

}  // namespace

void validate(const TreeSpec& tree) { validate_at(tree, "root"); }

int leaf_count(const TreeSpec& tree) {
  if (tree.is_leaf()) return 1;
  int total = 0;
  for (const auto& c : tree.children()) total += leaf_count(c);
  return total;
}

TreeSpec circulant_tree(int h) {
  return TreeSpec::node(h, std::vector<TreeSpec>(static_cast<std::size_t>(3 * h + 1), TreeSpec::leaf()));
}

TreeSpec balanced_tree(const std::vector<int>& hs) {
  TreeSpec t = TreeSpec::leaf();
  for (auto it = hs.rbegin(); it != hs.rend(); ++it) {
    t = TreeSpec::node(*it, std::vector<TreeSpec>(static_cast<std::size_t>(3 * *it + 1), t));
  }
  return t;
}

Orgraph circulant(int h) {
  if (h < 1) throw std::invalid_argument("circulant requires h >= 1");
  const int n = 3 * h + 1;
  OrgraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int d = 1; d <= h; ++d) b.add_edge(i, (i + d) % n);
  return b.build();
}

Orgraph lex_product(const Orgraph& outer, const Orgraph& inner) {
  const int n1 = outer.size();
  const int n2 = inner.size();
  if (static_cast<long>(n1) * n2 > kMaxVertices) {
    throw GraphError(GraphError::Kind::kTooManyVertices,
                     "lexicographic product has " + std::to_string(static_cast<long>(n1) * n2) + " vertices");
  }
  OrgraphBuilder b(n1 * n2);
  for (int a = 0; a < n1; ++a) {
    for (int c = 0; c < n1; ++c) {
      if (a == c) {
        for (const auto& [x, y] : inner.edges()) b.add_edge(a * n2 + x, a * n2 + y);
      } else if (outer.has_edge(a, c)) {
        for (int x = 0; x < n2; ++x)
          for (int y = 0; y < n2; ++y) b.add_edge(a * n2 + x, c * n2 + y);
      }
    }
  }
  return b.build();
}

WeightedOrgraph from_tree_spec(const TreeSpec& tree) {
  validate(tree);
  std::vector<LeafInfo> leaves;
  LeafInfo scratch;
  collect_leaves(tree, scratch, leaves);
  const int n = static_cast<int>(leaves.size());
  OrgraphBuilder b(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      const auto& px = leaves[x].path;
      const auto& py = leaves[y].path;
      std::size_t d = 0;
      while (px[d] == py[d]) ++d;  // distinct leaves diverge before either path ends
      if (circulant_edge(px[d], py[d], leaves[x].hs[d])) b.add_edge(x, y);
    }
  }
  WeightedOrgraph result{b.build(), {}};
  for (const auto& leaf : leaves) result.weights.push_back(leaf.weight);
  return result;
}

Rational weighted_out_measure(const WeightedOrgraph& w, int v) {
  if (v < 0 || v >= w.graph.size()) {
    throw GraphError(GraphError::Kind::kIndexOutOfRange, "vertex " + std::to_string(v) + " out of range");
  }
  Rational total = 0;
  w.graph.out_neighbors(v).for_each([&](int u) { total += w.weights[u]; });
  return total;
}

bool is_uniform(const WeightedOrgraph& w) {
  return std::adjacent_find(w.weights.begin(), w.weights.end(), std::not_equal_to<>()) == w.weights.end();
}

bool is_biregular(const Orgraph& g) {
  for (int v = 1; v < g.size(); ++v) {
    if (g.out_degree(v) != g.out_degree(0) || g.in_degree(v) != g.in_degree(0)) return false;
  }
  return true;
}

}  // namespace chkit
