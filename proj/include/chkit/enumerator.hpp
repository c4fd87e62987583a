#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "chkit/orgraph.hpp"
#include "chkit/patterns.hpp"
#include "chkit/verifier.hpp"

namespace chkit {

class EnumerationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EnumConstraints {
  int n = 1;
  bool require_c3_free = false;
  std::vector<Pattern> forbidden_induced;
  std::optional<int> min_outdegree_lower_bound;
};

// Size cap for enumeration: 8 unless CHKIT_MAX_N is set; never above 9.
int max_enumeration_size();

// One canonical representative per isomorphism class meeting the constraints,
// sorted by packed pair code. Built by canonical augmentation: a child of a
// parent is kept iff the added vertex lies in the orbit that the canonical
// labeling puts last, with duplicates among one parent's children dropped.
// Hereditary constraints (C3-freeness, induced patterns) prune every level;
// the out-degree bound is applied to the final level only. Parents are split
// across `jobs` threads; the output does not depend on `jobs`.
std::vector<Orgraph> enumerate(const EnumConstraints& constraints, int jobs = 1);

// Base-3 packing of pair_code (first pair most significant), prefixed by n so
// that codes of different sizes never collide.
std::uint64_t pack_code(const Orgraph& g);
Orgraph unpack_code(std::uint64_t code);

struct ChLevel {
  int n = 0;
  std::int64_t classes = 0;
  std::vector<Orgraph> failures;   // min out-degree above (n-1)/3
  std::vector<Orgraph> extremal;   // n = 3h+1 with min out-degree h, h >= 1
};

struct ChReport {
  std::vector<ChLevel> levels;
  bool passed() const;
};

// Checks the out-degree bound on every C3-free class with n <= n_max (<= 7).
ChReport verify_ch_up_to(int n_max, int jobs = 1);

struct ClaimTotals {
  std::int64_t instances = 0;
  std::map<std::string, std::int64_t> layer_instances;
  std::int64_t graphs_checked = 0;
  // (graph, violation) pairs.
  std::vector<std::pair<Orgraph, Violation>> violations;
};

struct ClaimsReport {
  std::map<int, std::int64_t> classes_per_n;
  std::map<std::string, ClaimTotals> claims;  // keyed by claim name
  bool passed() const;
};

// Runs every claim check on each C3-free, pattern-free class with 4 <= n <= n_max.
ClaimsReport verify_claims_up_to(int n_max, int jobs = 1);

// First class (in enumeration order) on n vertices that is C3-free, avoids the
// given induced patterns and has min out-degree > (n-1)/3.
std::optional<Orgraph> search_counterexample(int n, std::span<const Pattern> patterns, int jobs = 1);

}  // namespace chkit
