#include "chkit/orgraph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace chkit {

Orgraph::Orgraph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw GraphError(GraphError::Kind::kTooManyVertices,
                     "vertex count " + std::to_string(n) + " outside [0, " +
                         std::to_string(kMaxVertices) + "]");
  }
  out_.resize(n);
  in_.resize(n);
}

void Orgraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw GraphError(GraphError::Kind::kIndexOutOfRange,
                     "vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
  }
}

Orgraph Orgraph::from_edges(int n, std::span<const Edge> edges) {
  OrgraphBuilder builder(n);
  for (const auto& [u, v] : edges) builder.add_edge(u, v);
  return builder.build();
}

int Orgraph::edge_count() const {
  int m = 0;
  for (const auto& s : out_) m += s.size();
  return m;
}

int Orgraph::out_degree(int v) const {
  check_vertex(v);
  return out_[v].size();
}

int Orgraph::in_degree(int v) const {
  check_vertex(v);
  return in_[v].size();
}

int Orgraph::min_out_degree() const {
  if (n_ == 0) return 0;
  int best = std::numeric_limits<int>::max();
  for (const auto& s : out_) best = std::min(best, s.size());
  return best;
}

std::vector<Edge> Orgraph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    out_[u].for_each([&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

Orgraph Orgraph::relabeled(std::span<const int> perm) const {
  Orgraph g(n_);
  for (int u = 0; u < n_; ++u) {
    out_[u].for_each([&](int v) {
      g.out_[perm[u]].insert(perm[v]);
      g.in_[perm[v]].insert(perm[u]);
    });
  }
  return g;
}

OrgraphBuilder::OrgraphBuilder(int n) : graph_(n) {}

OrgraphBuilder& OrgraphBuilder::add_edge(int u, int v) {
  graph_.check_vertex(u);
  graph_.check_vertex(v);
  const std::string pair = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
  if (u == v) throw GraphError(GraphError::Kind::kLoop, "loop at vertex " + std::to_string(u));
  if (graph_.has_edge(u, v)) throw GraphError(GraphError::Kind::kDuplicateEdge, "duplicate edge " + pair);
  if (graph_.has_edge(v, u)) throw GraphError(GraphError::Kind::kAntiParallel, "anti-parallel edge " + pair);
  graph_.out_[u].insert(v);
  graph_.in_[v].insert(u);
  return *this;
}

bool is_c3_free(const Orgraph& g) {
  // A directed triangle u->v->w->u exists iff some edge u->v has out(v) meeting in(u).
  for (int u = 0; u < g.size(); ++u) {
    bool found = false;
    g.out_neighbors(u).for_each([&](int v) {
      if (!found && !(g.out_neighbors(v) & g.in_neighbors(u)).empty()) found = true;
    });
    if (found) return false;
  }
  return true;
}

std::optional<int> girth(const Orgraph& g) {
  const int n = g.size();
  std::optional<int> best;
  std::vector<int> dist(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      if (best && dist[u] + 1 >= *best) break;
      bool closed = false;
      g.out_neighbors(u).for_each([&](int v) {
        if (v == s) closed = true;
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      });
      if (closed) {
        best = dist[u] + 1;
        break;
      }
    }
  }
  return best;
}

Orgraph induced_subgraph(const Orgraph& g, std::span<const int> subset) {
  std::vector<int> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw GraphError(GraphError::Kind::kIndexOutOfRange, "repeated vertex in induced subgraph");
  }
  for (int v : sorted) {
    if (v < 0 || v >= g.size()) {
      throw GraphError(GraphError::Kind::kIndexOutOfRange,
                       "vertex " + std::to_string(v) + " out of range for n=" + std::to_string(g.size()));
    }
  }
  const int k = static_cast<int>(sorted.size());
  OrgraphBuilder b(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (g.has_edge(sorted[i], sorted[j])) b.add_edge(i, j);
  return b.build();
}

Orgraph induced_subgraph(const Orgraph& g, const VertexSet& subset) {
  auto vs = subset.to_vector();
  return induced_subgraph(g, std::span<const int>(vs));
}

}  // namespace chkit
