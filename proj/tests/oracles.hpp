#pragma once

// Brute-force reference implementations. They only use the raw accessors of
// Orgraph (size, has_edge, from_edges) so that they stay independent of the
// matcher, canonical labeling, flag counting and enumerator under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "chkit/flags.hpp"
#include "chkit/orgraph.hpp"

namespace oracle {

using chkit::Edge;
using chkit::Orgraph;

inline int pairs(int n) { return n * (n - 1) / 2; }

// Every labeled orgraph on n vertices: one of three states per unordered pair.
inline std::vector<Orgraph> all_labeled(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::int64_t total = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) total *= 3;
  std::vector<Orgraph> out;
  out.reserve(static_cast<std::size_t>(total));
  for (std::int64_t code = 0; code < total; ++code) {
    std::vector<Edge> edges;
    std::int64_t rest = code;
    for (const auto& [i, j] : slots) {
      const int s = static_cast<int>(rest % 3);
      rest /= 3;
      if (s == 1) edges.emplace_back(i, j);
      if (s == 2) edges.emplace_back(j, i);
    }
    out.push_back(Orgraph::from_edges(n, edges));
  }
  return out;
}

inline bool c3_free(const Orgraph& g) {
  const int n = g.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (a != b && b != c && a != c && g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, a)) return false;
  return true;
}

inline int out_degree(const Orgraph& g, int v) {
  int d = 0;
  for (int w = 0; w < g.size(); ++w) d += g.has_edge(v, w) ? 1 : 0;
  return d;
}

inline int min_out_degree(const Orgraph& g) {
  int best = g.size();
  for (int v = 0; v < g.size(); ++v) best = std::min(best, out_degree(g, v));
  return g.size() == 0 ? 0 : best;
}

// Relabeling-invariant code: the lexicographically smallest row-major
// adjacency string over all n! vertex orders.
inline std::vector<int> brute_code(const Orgraph& g) {
  const int n = g.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    std::vector<int> code;
    code.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) code.push_back(g.has_edge(perm[i], perm[j]) ? 1 : 0);
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool brute_isomorphic(const Orgraph& a, const Orgraph& b) {
  return a.size() == b.size() && brute_code(a) == brute_code(b);
}

// Number of isomorphism classes among labeled orgraphs on n vertices that pass
// `keep`.
template <class Pred>
std::size_t class_count(int n, Pred keep) {
  std::set<std::vector<int>> codes;
  for (const auto& g : all_labeled(n))
    if (keep(g)) codes.insert(brute_code(g));
  return codes.size();
}

inline std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Does some bijection pattern->subset carry edges to edges (and, when
// `induced`, non-edges to non-edges)?
inline bool embeds_on(const Orgraph& g, const Orgraph& p, std::vector<int> subset, bool induced) {
  std::sort(subset.begin(), subset.end());
  const int k = p.size();
  do {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = 0; j < k && ok; ++j) {
        if (i == j) continue;
        const bool pe = p.has_edge(i, j);
        const bool ge = g.has_edge(subset[i], subset[j]);
        if (pe && !ge) ok = false;
        if (induced && !pe && ge) ok = false;
      }
    if (ok) return true;
  } while (std::next_permutation(subset.begin(), subset.end()));
  return false;
}

// Vertex subsets of g carrying a copy of p.
inline std::vector<std::vector<int>> copy_sets(const Orgraph& g, const Orgraph& p, bool induced) {
  std::vector<std::vector<int>> out;
  if (p.size() > g.size()) return out;
  for (auto& s : subsets(g.size(), p.size()))
    if (embeds_on(g, p, s, induced)) out.push_back(s);
  return out;
}

inline std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Density by enumerating every (l-k)-subset of the unlabeled vertices of g and
// every assignment of the flag's free vertices to it.
inline chkit::Rational density(const chkit::Flag& f, const Orgraph& g, const std::vector<int>& labels,
                               const std::vector<int>& excluded = {}) {
  const int k = static_cast<int>(labels.size());
  std::vector<int> pool;
  for (int v = 0; v < g.size(); ++v) {
    if (std::find(labels.begin(), labels.end(), v) != labels.end()) continue;
    if (std::find(excluded.begin(), excluded.end(), v) != excluded.end()) continue;
    pool.push_back(v);
  }
  const int extra = f.size() - k;
  std::int64_t hits = 0;
  for (const auto& idx : subsets(static_cast<int>(pool.size()), extra)) {
    std::vector<int> chosen;
    for (int i : idx) chosen.push_back(pool[i]);
    bool hit = false;
    do {
      // flag vertex -> host vertex
      std::vector<int> map(f.size(), -1);
      for (int i = 0; i < k; ++i) map[f.theta()[i]] = labels[i];
      for (int i = 0; i < extra; ++i) map[f.free_vertices()[i]] = chosen[i];
      bool ok = true;
      for (int a = 0; a < f.size() && ok; ++a)
        for (int b = 0; b < f.size() && ok; ++b)
          if (a != b && f.graph().has_edge(a, b) != g.has_edge(map[a], map[b])) ok = false;
      hit = ok;
    } while (!hit && std::next_permutation(chosen.begin(), chosen.end()));
    if (hit) ++hits;
  }
  return chkit::Rational(hits, binom(static_cast<int>(pool.size()), extra));
}

// Ordered independent pairs (v, w) with no x such that v->x->w.
inline std::vector<Edge> qualifying_pairs(const Orgraph& p) {
  std::vector<Edge> out;
  for (int v = 0; v < p.size(); ++v)
    for (int w = 0; w < p.size(); ++w) {
      if (v == w || p.has_edge(v, w) || p.has_edge(w, v)) continue;
      bool path = false;
      for (int x = 0; x < p.size(); ++x) path = path || (p.has_edge(v, x) && p.has_edge(x, w));
      if (!path) out.emplace_back(v, w);
    }
  return out;
}

// Random C3-free orgraph: pairs visited in random order, each oriented at
// random with probability `edge_prob`, skipping orientations that close a C3.
inline Orgraph random_c3_free(int n, double edge_prob, std::mt19937& rng) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::bernoulli_distribution take(edge_prob), flip(0.5);
  for (auto [a, b] : slots) {
    if (!take(rng)) continue;
    if (flip(rng)) std::swap(a, b);
    bool closes = false;
    for (int x = 0; x < n; ++x) closes = closes || (adj[b][x] && adj[x][a]);
    if (!closes) adj[a][b] = true;
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (adj[i][j]) edges.emplace_back(i, j);
  return Orgraph::from_edges(n, edges);
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle
