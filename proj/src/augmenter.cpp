#include "chkit/augmenter.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "chkit/graph_io.hpp"

namespace chkit {

std::vector<Edge> qualifying_pairs(const Orgraph& p) {
  std::vector<Edge> pairs;
  for (int v = 0; v < p.size(); ++v) {
    for (int w = 0; w < p.size(); ++w) {
      if (!p.independent(v, w)) continue;
      if ((p.out_neighbors(v) & p.in_neighbors(w)).empty()) pairs.emplace_back(v, w);
    }
  }
  return pairs;
}

AugmentedPattern augment(const Pattern& p) {
  if (!is_c3_free(p.graph)) throw std::invalid_argument("cannot augment " + p.name + ": contains C3");
  const auto pairs = qualifying_pairs(p.graph);
  const int k = p.graph.size();
  OrgraphBuilder b(k + static_cast<int>(pairs.size()));
  for (const auto& [u, v] : p.graph.edges()) b.add_edge(u, v);
  AugmentedPattern result{"aug-" + p.name, p, Orgraph{}, {}};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const int x = k + static_cast<int>(i);
    b.add_edge(pairs[i].first, x);
    b.add_edge(x, pairs[i].second);
    result.added.push_back({x, pairs[i].first, pairs[i].second});
  }
  result.graph = b.build();
  return result;
}

std::vector<AugmentedPattern> not_induced_catalog() {
  std::vector<AugmentedPattern> out;
  for (const auto& p : patterns::ch3_forbidden()) out.push_back(augment(p));
  return out;
}

std::optional<AugmentedPattern> augmented_by_name(std::string_view name) {
  for (auto& a : not_induced_catalog())
    if (a.name == name) return a;
  return std::nullopt;
}

std::vector<std::string> augmented_names() { return {"aug-in-pendant", "aug-out-pendant", "aug-twisted-circle"}; }

const char* merge_class_name(MergeClass c) {
  switch (c) {
    case MergeClass::kAntiParallel: return "anti_parallel";
    case MergeClass::kCreatesC3: return "creates_c3";
    case MergeClass::kValid: return "valid";
  }
  return "unknown";
}

std::vector<MergeResult> identification_analysis(const AugmentedPattern& a) {
  std::vector<MergeResult> results;
  const auto catalog = not_induced_catalog();
  const int count = static_cast<int>(a.added.size());
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      const AddedVertex& x1 = a.added[i];
      const AddedVertex& x2 = a.added[j];
      MergeResult r{i, j, MergeClass::kValid, std::nullopt, {}};
      const std::set<int> tails{x1.tail, x2.tail};
      const std::set<int> heads{x1.head, x2.head};
      if (std::any_of(tails.begin(), tails.end(), [&](int t) { return heads.count(t) > 0; })) {
        r.classification = MergeClass::kAntiParallel;
        results.push_back(std::move(r));
        continue;
      }
      // Renumber: base vertices, then added vertices other than x2.
      std::vector<int> index(a.graph.size(), -1);
      int next = 0;
      for (int v = 0; v < a.graph.size(); ++v)
        if (v != x2.vertex) index[v] = next++;
      index[x2.vertex] = index[x1.vertex];

      std::set<Edge> edges;
      for (const auto& [u, v] : a.graph.edges()) edges.emplace(index[u], index[v]);
      Orgraph merged = Orgraph::from_edges(next, std::vector<Edge>(edges.begin(), edges.end()));
      if (!is_c3_free(merged)) {
        r.classification = MergeClass::kCreatesC3;
      } else {
        for (const auto& aug : catalog)
          if (contains_subgraph(merged, aug.graph)) r.contains.push_back(aug.name);
        r.merged = std::move(merged);
      }
      results.push_back(std::move(r));
    }
  }
  return results;
}

std::string format_augmented(const AugmentedPattern& a) {
  std::string text = format_orgraph(a.graph);
  std::string line = "# added:";
  for (const auto& x : a.added) line += " " + std::to_string(x.vertex);
  const auto header_end = text.find('\n') + 1;
  text.insert(header_end, line + "\n");
  return text;
}

}  // namespace chkit
