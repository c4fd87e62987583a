#include <algorithm>
#include <numeric>
#include <tuple>

#include "chkit/orgraph.hpp"

namespace chkit {
namespace {

using Partition = std::vector<std::vector<int>>;

// Refines to the coarsest equitable partition below `cells`: every vertex of a
// cell has the same number of out- and in-neighbors in every other cell.
// Splits are ordered by signature only, so the result is label-invariant.
void refine(const Orgraph& g, Partition& cells) {
  while (true) {
    const std::size_t before = cells.size();
    std::vector<VertexSet> cell_sets(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (int v : cells[c]) cell_sets[c].insert(v);

    Partition next;
    next.reserve(cells.size());
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, int>> keyed;
      keyed.reserve(cell.size());
      for (int v : cell) {
        std::vector<int> sig;
        sig.reserve(2 * cell_sets.size());
        for (const auto& s : cell_sets) {
          sig.push_back((g.out_neighbors(v) & s).size());
          sig.push_back((g.in_neighbors(v) & s).size());
        }
        keyed.emplace_back(std::move(sig), v);
      }
      std::sort(keyed.begin(), keyed.end());
      for (std::size_t i = 0; i < keyed.size();) {
        std::size_t j = i;
        std::vector<int> group;
        while (j < keyed.size() && keyed[j].first == keyed[i].first) group.push_back(keyed[j++].second);
        next.push_back(std::move(group));
        i = j;
      }
    }
    cells = std::move(next);
    if (cells.size() == before) return;
  }
}

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

struct Search {
  const Orgraph& g;
  std::vector<unsigned char> best_code;
  std::vector<int> best_labeling;
  std::vector<int> parent;  // union-find over automorphism orbits
  bool have_best = false;

  void leaf(const Partition& cells) {
    const int n = g.size();
    std::vector<int> labeling(n);
    for (int i = 0; i < n; ++i) labeling[cells[i][0]] = i;
    auto code = pair_code(g.relabeled(labeling));
    if (!have_best || code < best_code) {
      best_code = std::move(code);
      best_labeling = std::move(labeling);
      std::iota(parent.begin(), parent.end(), 0);
      have_best = true;
    } else if (code == best_code) {
      // labeling^-1 o best_labeling is an automorphism.
      std::vector<int> inverse(n);
      for (int v = 0; v < n; ++v) inverse[labeling[v]] = v;
      for (int v = 0; v < n; ++v) {
        int a = find_root(parent, v);
        int b = find_root(parent, inverse[best_labeling[v]]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }

  void run(Partition cells) {
    refine(g, cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const auto t = static_cast<std::size_t>(target - cells.begin());
    const std::vector<int> cell = cells[t];
    for (int v : cell) {
      Partition child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + t);
      child.push_back({v});
      std::vector<int> rest;
      for (int u : cell)
        if (u != v) rest.push_back(u);
      child.push_back(std::move(rest));
      child.insert(child.end(), cells.begin() + t + 1, cells.end());
      run(std::move(child));
    }
  }
};

}  // namespace

std::vector<unsigned char> pair_code(const Orgraph& g) {
  const int n = g.size();
  std::vector<unsigned char> code;
  code.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) code.push_back(static_cast<unsigned char>(g.relation(i, j)));
  return code;
}

CanonicalLabeling canonical_labeling(const Orgraph& g) {
  const int n = g.size();
  if (n == 0) return {};
  Search search{g, {}, {}, std::vector<int>(n), false};
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  search.run(Partition{all});

  CanonicalLabeling result;
  result.form = g.relabeled(search.best_labeling);
  result.labeling = search.best_labeling;
  result.orbit.resize(n);
  for (int v = 0; v < n; ++v) result.orbit[v] = find_root(search.parent, v);
  return result;
}

Orgraph canonical_form(const Orgraph& g) { return canonical_labeling(g).form; }

bool are_isomorphic(const Orgraph& a, const Orgraph& b) {
  const int n = a.size();
  if (n != b.size() || a.edge_count() != b.edge_count()) return false;

  auto degrees = [](const Orgraph& g, int v) { return std::make_pair(g.out_degree(v), g.in_degree(v)); };
  std::vector<std::pair<int, int>> da, db;
  for (int v = 0; v < n; ++v) {
    da.push_back(degrees(a, v));
    db.push_back(degrees(b, v));
  }
  auto sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;

  // Match vertices of `a` in an order where each vertex (after the first of its
  // component) is adjacent to an earlier one, so adjacency prunes early.
  std::vector<int> order;
  std::vector<bool> placed(n, false);
  for (int start = 0; start < n; ++start) {
    if (placed[start]) continue;
    std::vector<int> frontier{start};
    placed[start] = true;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      int u = frontier[i];
      order.push_back(u);
      (a.out_neighbors(u) | a.in_neighbors(u)).for_each([&](int w) {
        if (!placed[w]) {
          placed[w] = true;
          frontier.push_back(w);
        }
      });
    }
  }

  std::vector<int> image(n, -1);
  VertexSet used;
  auto extend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    const int u = order[depth];
    VertexSet candidates = b.vertices() - used;
    for (std::size_t d = 0; d < depth; ++d) {
      const int q = order[d];
      const int iq = image[q];
      switch (a.relation(u, q)) {
        case Relation::kForward: candidates &= b.in_neighbors(iq); break;
        case Relation::kBackward: candidates &= b.out_neighbors(iq); break;
        case Relation::kNone: candidates -= b.in_neighbors(iq) | b.out_neighbors(iq); break;
      }
    }
    bool found = false;
    candidates.for_each([&](int c) {
      if (found || db[c] != da[u]) return;
      image[u] = c;
      used.insert(c);
      if (self(self, depth + 1)) {
        found = true;
        return;
      }
      used.erase(c);
      image[u] = -1;
    });
    return found;
  };
  return extend(extend, 0);
}

}  // namespace chkit
