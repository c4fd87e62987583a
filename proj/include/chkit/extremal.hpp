#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "chkit/orgraph.hpp"
#include "chkit/rational.hpp"

namespace chkit {

class TreeSpecError : public std::invalid_argument {
 public:
  TreeSpecError(std::string path, const std::string& what)
      : std::invalid_argument(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Rooted ordered tree describing an extremal configuration. Every internal node
// carries h >= 1 and exactly 3h+1 children; leaves become vertices. Child order
// matters: siblings i and j are joined by the circulant rule of their parent.
class TreeSpec {
 public:
  static TreeSpec leaf() { return TreeSpec(); }
  static TreeSpec node(int h, std::vector<TreeSpec> children) {
    TreeSpec t;
    t.leaf_ = false;
    t.h_ = h;
    t.children_ = std::move(children);
    return t;
  }

  bool is_leaf() const { return leaf_; }
  int h() const { return h_; }
  const std::vector<TreeSpec>& children() const { return children_; }

  friend bool operator==(const TreeSpec&, const TreeSpec&) = default;

 private:
  TreeSpec() = default;
  bool leaf_ = true;
  int h_ = 0;
  std::vector<TreeSpec> children_;
};

// Throws TreeSpecError naming the offending node, e.g. "root.children[2]".
void validate(const TreeSpec& tree);
int leaf_count(const TreeSpec& tree);

// One internal node with parameter h over 3h+1 leaves.
TreeSpec circulant_tree(int h);
// Balanced tree whose level-d nodes all carry hs[d].
TreeSpec balanced_tree(const std::vector<int>& hs);

struct WeightedOrgraph {
  Orgraph graph;
  std::vector<Rational> weights;
};

// Vertices Z_{3h+1}; i->j iff (j - i) mod (3h+1) lies in {1, ..., h}.
Orgraph circulant(int h);

// Vertex (a, b) has index a * |b| + b; (a,b)->(a',b') iff a->a', or a == a'
// and b->b'.
Orgraph lex_product(const Orgraph& outer, const Orgraph& inner);

// Leaves in depth-first order become vertices; leaf weight is the product of
// 1/(3h+1) over its ancestors.
WeightedOrgraph from_tree_spec(const TreeSpec& tree);

// Total weight of the out-neighbors of v.
Rational weighted_out_measure(const WeightedOrgraph& w, int v);

bool is_uniform(const WeightedOrgraph& w);
bool is_biregular(const Orgraph& g);
inline bool is_biregular(const WeightedOrgraph& w) { return is_biregular(w.graph); }

}  // namespace chkit
