#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chkit/orgraph.hpp"
#include "chkit/rational.hpp"

namespace chkit {

class FlagError : public std::invalid_argument {
 public:
  enum class Kind {
    kInvalidType,
    kInvalidFlag,
    kTypeMismatch,
    kEmptySampleSpace,
    kBadLabels,
    kLabelsDoNotInduceType,
    kNotC3Free,
    kNotSingleFreeVertex,
  };

  FlagError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// A totally labeled C3-free orgraph on 0..k-1.
class TypeSpec {
 public:
  TypeSpec(std::string name, Orgraph graph);

  const std::string& name() const { return name_; }
  const Orgraph& graph() const { return graph_; }
  int size() const { return graph_.size(); }

  friend bool operator==(const TypeSpec& a, const TypeSpec& b) { return a.graph_ == b.graph_; }

 private:
  std::string name_;
  Orgraph graph_;
};

namespace types {
TypeSpec empty();        // size 0
TypeSpec vertex();       // size 1
TypeSpec arc();          // A: 0->1
TypeSpec independent();  // N: two vertices, no edge
TypeSpec path();         // P: 0->1->2
}  // namespace types

// A partially labeled C3-free orgraph: theta embeds the type as an induced
// subgraph. Vertices outside im(theta) are free.
class Flag {
 public:
  Flag(std::string name, TypeSpec sigma, Orgraph graph, std::vector<int> theta, std::string note = {});

  const std::string& name() const { return name_; }
  const TypeSpec& type() const { return sigma_; }
  const Orgraph& graph() const { return graph_; }
  const std::vector<int>& theta() const { return theta_; }
  const std::vector<int>& free_vertices() const { return free_; }
  const std::string& note() const { return note_; }
  int size() const { return graph_.size(); }

 private:
  std::string name_;
  TypeSpec sigma_;
  Orgraph graph_;
  std::vector<int> theta_;
  std::vector<int> free_;
  std::string note_;
};

// Built-in flags. Labeled vertices come first (label i is vertex i-1), then the
// free vertex x, then y where present.
namespace flags {
Flag alpha();   // 1->x
Flag o_a();     // 1->2, 1->x, 2->x
Flag o_p();     // 1->2, 2->3, 1->x, 2->x, 3->x
Flag ohat_a();  // 1->2, 2->y, 1->x, 2->x, y->x; 1 independent of y
Flag i_a();     // 1->2, x->1, x->2
Flag k21_a();   // 1->2, x->2; x independent of 1
Flag p3_a();    // 1->2, 2->x; x independent of 1
Flag k21_n();   // 1->x, 2->x; 1 independent of 2
Flag p3_n();    // 1->x, x->2; 1 independent of 2

// CLI names: alpha, o_a, o_p, ohat_a, i_a, k21_a, p3_a, k21_n, p3_n.
std::optional<Flag> by_name(std::string_view name);
std::vector<std::string> names();
}  // namespace flags

// p(F, big): probability that a uniformly random |V(F)|-subset containing the
// labeled vertices of `big` induces a flag isomorphic to F.
Rational density(const Flag& f, const Flag& big);

// F(v_1, ..., v_k) evaluated in g with theta(i) = labels[i].
Rational relative_density(const Flag& f, const Orgraph& g, std::span<const int> labels);

// Like relative_density for single-free-vertex flags, but the free vertex is
// drawn from V(g) minus labels minus `excluded`.
Rational restricted_density(const Flag& f, const Orgraph& g, std::span<const int> labels,
                            std::span<const int> excluded);

// Sums relative_density over every sigma-flag on `flag_size` vertices; true iff
// the sum is exactly 1. Requires flag_size == sigma.size() + 1.
bool check_normalization(const Orgraph& g, const TypeSpec& sigma, std::span<const int> labels, int flag_size);

// All sigma-flags on `flag_size` vertices up to flag isomorphism.
std::vector<Flag> flags_of_type(const TypeSpec& sigma, int flag_size);

// Label-preserving isomorphism of two flags of the same type.
bool flags_isomorphic(const Flag& a, const Flag& b);

// Unchecked counting core: the number of (|V(F)|-k)-subsets of
// V(g) \ labels \ excluded completing `labels` to a copy of F. Callers must have
// validated the labels and C3-freeness themselves.
std::int64_t count_realizations(const Flag& f, const Orgraph& g, std::span<const int> labels,
                                 const VertexSet& excluded = {});

}  // namespace chkit
