#include "chkit/patterns.hpp"

#include <algorithm>
#include <set>

namespace chkit {
namespace patterns {
namespace {

Pattern make(std::string name, std::vector<std::string> vertex_names, std::initializer_list<Edge> edges,
             std::string note = {}) {
  const int n = static_cast<int>(vertex_names.size());
  return Pattern{std::move(name), Orgraph::from_edges(n, edges), std::move(vertex_names), std::move(note)};
}

}  // namespace

Pattern c3() { return make("c3", {"a", "b", "c"}, {{0, 1}, {1, 2}, {2, 0}}); }
Pattern i3() { return make("i3", {"a", "b", "c"}, {}); }
Pattern k12() { return make("k12", {"a", "b", "c"}, {{0, 1}, {0, 2}}); }
Pattern k21() { return make("k21", {"a", "b", "c"}, {{0, 2}, {1, 2}}); }
Pattern transitive_triangle() { return make("trans-triangle", {"s", "m", "t"}, {{0, 1}, {0, 2}, {1, 2}}); }
Pattern path3() { return make("path3", {"a", "b", "c"}, {{0, 1}, {1, 2}}); }

Pattern in_pendant() {
  return make("in-pendant", {"s", "m", "t", "p"}, {{0, 1}, {0, 2}, {1, 2}, {3, 1}},
              "v->x, v->z, x->z with y->x, y independent of v and z");
}

Pattern out_pendant() {
  return make("out-pendant", {"s", "m", "t", "p"}, {{0, 1}, {0, 2}, {1, 2}, {1, 3}},
              "u->v, u->w, v->w with v->x, x independent of u and w");
}

Pattern twisted_circle() {
  return make("twisted-circle", {"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}},
              "v->w->y->z with v->z, v independent of y, w independent of z");
}

std::vector<Pattern> ch3_forbidden() { return {in_pendant(), out_pendant(), twisted_circle()}; }

std::optional<Pattern> by_name(std::string_view name) {
  if (name == "c3") return c3();
  if (name == "i3") return i3();
  if (name == "k12") return k12();
  if (name == "k21") return k21();
  if (name == "trans-triangle") return transitive_triangle();
  if (name == "in-pendant") return in_pendant();
  if (name == "out-pendant") return out_pendant();
  if (name == "twisted-circle") return twisted_circle();
  return std::nullopt;
}

std::vector<std::string> names() {
  return {"c3", "i3", "k12", "k21", "trans-triangle", "in-pendant", "out-pendant", "twisted-circle"};
}

}  // namespace patterns

namespace {

// Backtracking matcher. Pattern vertices are placed most-constrained first:
// each next vertex maximizes edges to already placed ones, then degree.
class Matcher {
 public:
  Matcher(const Orgraph& host, const Orgraph& pattern, bool induced)
      : host_(host), pattern_(pattern), induced_(induced), image_(pattern.size(), -1) {
    const int k = pattern.size();
    std::vector<bool> placed(k, false);
    auto degree = [&](int v) { return pattern.out_degree(v) + pattern.in_degree(v); };
    for (int step = 0; step < k; ++step) {
      int best = -1;
      std::pair<int, int> best_key{-1, -1};
      for (int v = 0; v < k; ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (int q : order_)
          if (pattern.relation(v, q) != Relation::kNone) ++links;
        std::pair<int, int> key{links, degree(v)};
        if (key > best_key) {
          best_key = key;
          best = v;
        }
      }
      placed[best] = true;
      order_.push_back(best);
    }
  }

  // Calls visit(image) for each embedding until it returns false.
  template <typename Visit>
  void run(Visit&& visit) {
    stop_ = false;
    extend(0, visit);
  }

 private:
  template <typename Visit>
  void extend(std::size_t depth, Visit& visit) {
    if (depth == order_.size()) {
      if (!visit(image_)) stop_ = true;
      return;
    }
    const int p = order_[depth];
    VertexSet candidates = host_.vertices() - used_;
    for (std::size_t d = 0; d < depth; ++d) {
      const int q = order_[d];
      const int iq = image_[q];
      switch (pattern_.relation(p, q)) {
        case Relation::kForward: candidates &= host_.in_neighbors(iq); break;
        case Relation::kBackward: candidates &= host_.out_neighbors(iq); break;
        case Relation::kNone:
          if (induced_) candidates -= host_.in_neighbors(iq) | host_.out_neighbors(iq);
          break;
      }
    }
    const int need_out = pattern_.out_degree(p);
    const int need_in = pattern_.in_degree(p);
    for (int c = candidates.first(); c >= 0 && !stop_; c = candidates.next(c + 1)) {
      if (host_.out_neighbors(c).size() < need_out || host_.in_neighbors(c).size() < need_in) continue;
      image_[p] = c;
      used_.insert(c);
      extend(depth + 1, visit);
      used_.erase(c);
      image_[p] = -1;
    }
  }

  const Orgraph& host_;
  const Orgraph& pattern_;
  bool induced_;
  std::vector<int> order_;
  std::vector<int> image_;
  VertexSet used_;
  bool stop_ = false;
};

bool contains(const Orgraph& g, const Orgraph& p, bool induced) {
  if (p.size() > g.size()) return false;
  bool found = false;
  Matcher(g, p, induced).run([&](const std::vector<int>&) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace

std::vector<VertexMap> find_induced(const Orgraph& g, const Pattern& p) {
  std::vector<VertexMap> maps;
  if (p.graph.size() > g.size()) return maps;
  std::set<std::vector<int>> images;
  Matcher(g, p.graph, true).run([&](const std::vector<int>& image) {
    std::vector<int> key = image;
    std::sort(key.begin(), key.end());
    if (images.insert(std::move(key)).second) maps.push_back(image);
    return true;
  });
  return maps;
}

std::optional<VertexMap> first_induced(const Orgraph& g, const Orgraph& p) {
  std::optional<VertexMap> result;
  if (p.size() > g.size()) return result;
  Matcher(g, p, true).run([&](const std::vector<int>& image) {
    result = image;
    return false;
  });
  return result;
}

bool contains_induced(const Orgraph& g, const Pattern& p) { return contains(g, p.graph, true); }
bool contains_subgraph(const Orgraph& g, const Pattern& p) { return contains(g, p.graph, false); }
bool contains_subgraph(const Orgraph& g, const Orgraph& p) { return contains(g, p, false); }

bool is_pattern_free(const Orgraph& g, std::span<const Pattern> patterns, bool induced) {
  return std::none_of(patterns.begin(), patterns.end(),
                      [&](const Pattern& p) { return contains(g, p.graph, induced); });
}

}  // namespace chkit
