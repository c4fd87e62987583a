#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chkit/vertex_set.hpp"

namespace chkit {

using Edge = std::pair<int, int>;

class GraphError : public std::invalid_argument {
 public:
  enum class Kind { kLoop, kAntiParallel, kDuplicateEdge, kIndexOutOfRange, kTooManyVertices };

  GraphError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// How an ordered pair (u, v) is joined.
enum class Relation { kNone, kForward, kBackward };

// A finite oriented graph on vertices 0..n-1: no loops, and at most one edge
// between any two vertices regardless of direction. Immutable once built.
class Orgraph {
 public:
  Orgraph() = default;
  explicit Orgraph(int n);

  // Throws GraphError on a loop, anti-parallel pair, duplicate edge or bad index.
  static Orgraph from_edges(int n, std::span<const Edge> edges);
  static Orgraph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int size() const { return n_; }
  int edge_count() const;

  bool has_edge(int u, int v) const { return out_[u].contains(v); }
  bool independent(int u, int v) const { return u != v && !has_edge(u, v) && !has_edge(v, u); }
  Relation relation(int u, int v) const {
    if (has_edge(u, v)) return Relation::kForward;
    if (has_edge(v, u)) return Relation::kBackward;
    return Relation::kNone;
  }

  const VertexSet& out_neighbors(int v) const { return out_[v]; }
  const VertexSet& in_neighbors(int v) const { return in_[v]; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  int out_degree(int v) const;
  int in_degree(int v) const;
  // 0 for the empty graph on no vertices.
  int min_out_degree() const;

  // Edges sorted lexicographically by (tail, head).
  std::vector<Edge> edges() const;

  // The graph with vertex v renamed perm[v]; perm must be a permutation of 0..n-1.
  Orgraph relabeled(std::span<const int> perm) const;

  friend bool operator==(const Orgraph&, const Orgraph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;

  friend class OrgraphBuilder;
};

// Incremental construction with the same validation as from_edges.
class OrgraphBuilder {
 public:
  explicit OrgraphBuilder(int n);
  OrgraphBuilder& add_edge(int u, int v);
  Orgraph build() const { return graph_; }

 private:
  Orgraph graph_;
};

bool is_c3_free(const Orgraph& g);
// Length of a shortest directed cycle; nullopt when the graph is acyclic.
std::optional<int> girth(const Orgraph& g);

// Induced subgraph on `subset`, relabeled in increasing vertex order.
Orgraph induced_subgraph(const Orgraph& g, std::span<const int> subset);
Orgraph induced_subgraph(const Orgraph& g, const VertexSet& subset);

// Canonical labeling by individualization-refinement. Suitable for graphs whose
// automorphism group is modest (everything up to ~16 vertices in practice).
struct CanonicalLabeling {
  Orgraph form;
  // labeling[v] = position of vertex v in the canonical form.
  std::vector<int> labeling;
  // orbit[v] = smallest vertex in the automorphism orbit of v.
  std::vector<int> orbit;
};

CanonicalLabeling canonical_labeling(const Orgraph& g);
Orgraph canonical_form(const Orgraph& g);

// Pair states in column order (0,1),(0,2),(1,2),(0,3),... with 0 = none,
// 1 = forward, 2 = backward. Canonical forms minimize this code.
std::vector<unsigned char> pair_code(const Orgraph& g);

// Backtracking isomorphism test; agrees with comparing canonical forms but does
// not enumerate the automorphism group, so it scales to large symmetric graphs.
bool are_isomorphic(const Orgraph& a, const Orgraph& b);

}  // namespace chkit
