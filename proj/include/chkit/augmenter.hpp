#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chkit/orgraph.hpp"
#include "chkit/patterns.hpp"

namespace chkit {

// A vertex added for the ordered pair (tail, head): its only edges are
// tail->vertex and vertex->head.
struct AddedVertex {
  int vertex;
  int tail;
  int head;
};

struct AugmentedPattern {
  std::string name;
  Pattern base;
  // Base vertices keep their indices; added vertices follow in pair order.
  Orgraph graph;
  std::vector<AddedVertex> added;
};

// Ordered independent pairs (v, w) of p with no x such that v->x->w, sorted.
std::vector<Edge> qualifying_pairs(const Orgraph& p);

// One new vertex per qualifying pair. Requires a C3-free base.
AugmentedPattern augment(const Pattern& p);

// aug-in-pendant, aug-out-pendant, aug-twisted-circle.
std::vector<AugmentedPattern> not_induced_catalog();
std::optional<AugmentedPattern> augmented_by_name(std::string_view name);
std::vector<std::string> augmented_names();

enum class MergeClass { kAntiParallel, kCreatesC3, kValid };
const char* merge_class_name(MergeClass c);

struct MergeResult {
  // Indices into AugmentedPattern::added, first < second.
  int first;
  int second;
  MergeClass classification;
  // Present for valid merges: the merged vertex replaces added[first] and
  // added[second] is removed.
  std::optional<Orgraph> merged;
  // Names of catalog augmented patterns contained as subgraphs of `merged`.
  std::vector<std::string> contains;
};

// Classifies identifying each unordered pair of added vertices.
std::vector<MergeResult> identification_analysis(const AugmentedPattern& a);

// Augmented graph text with a "# added: <indices>" line after the header.
std::string format_augmented(const AugmentedPattern& a);

}  // namespace chkit
