#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "chkit/orgraph.hpp"
#include "chkit/rational.hpp"

namespace chkit {

class VerifierError : public std::invalid_argument {
 public:
  enum class Kind { kNoOutEdge, kNotACycle, kPrecondition };
  VerifierError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Raised when a graph satisfying the main theorem's hypotheses has no vertex of
// out-degree <= (n-1)/3. Indicates a bug or a broken precondition.
class TheoremContradiction : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// ---- critical edges -------------------------------------------------------

// Out-neighbors w of v minimizing |A(v) & A(w)|, i.e. of least out-degree inside
// the out-neighborhood of v. Empty iff v is a sink.
std::vector<int> critical_successors(const Orgraph& g, int v);

struct CriticalEdgeReport {
  std::vector<std::vector<int>> out_neighbors;
  std::vector<std::vector<int>> critical;
};
CriticalEdgeReport critical_edges(const Orgraph& g);

// Walks from vertex 0 along smallest-index critical successors until a vertex
// repeats and returns the closed part. Throws kNoOutEdge if g has a sink.
std::vector<int> find_critical_cycle(const Orgraph& g);

struct CycleAlphaReport {
  Rational sum;
  Rational min;
  int argmin = -1;
};
// Throws kNotACycle unless `cycle` is a directed cycle of g.
CycleAlphaReport cycle_alpha_report(const Orgraph& g, std::span<const int> cycle);

// ---- claim checks ---------------------------------------------------------

struct Violation {
  std::vector<int> tuple;    // the instance, e.g. (v, w) or (u, v, w)
  std::vector<int> witness;  // empty when no witness applies
  std::string detail;
};

enum class ClaimOutcome { kPass, kFail, kPrecondition };

struct ClaimReport {
  std::string claim;
  bool preconditions_ok = true;
  std::string precondition_failure;
  // Instances where the claim's hypotheses hold and its conclusion was tested.
  std::int64_t instances = 0;
  // Per-layer counts for multi-layer claims ("a", "b" for crucial).
  std::map<std::string, std::int64_t> layer_instances;
  std::vector<Violation> violations;

  ClaimOutcome outcome() const {
    if (!preconditions_ok) return ClaimOutcome::kPrecondition;
    return violations.empty() ? ClaimOutcome::kPass : ClaimOutcome::kFail;
  }
};

// Why g falls outside the claims' domain (C3, an induced forbidden pattern, or
// fewer than 4 vertices), or nullopt.
std::optional<std::string> claim_precondition_failure(const Orgraph& g);

ClaimReport check_ohata(const Orgraph& g);
ClaimReport check_p3a(const Orgraph& g);
ClaimReport check_p3(const Orgraph& g);
ClaimReport check_nok21(const Orgraph& g);
ClaimReport check_induction(const Orgraph& g);
ClaimReport check_crucial(const Orgraph& g);

// Names: ohata, p3a, p3, nok21, induction, crucial.
std::vector<std::string> claim_names();
ClaimReport check_claim(const Orgraph& g, const std::string& name);
std::vector<ClaimReport> check_all_claims(const Orgraph& g);

// Net contribution of a single outside vertex x to the per-vertex inequality
// for the path u->v->w with u, w independent. Throws kPrecondition unless the
// path shape holds, x is outside {u, v, w}, g is C3-free and {u, v, w, x} does
// not induce a twisted circle.
int per_vertex_contribution(const Orgraph& g, int u, int v, int w, int x);

// Left side of the three-vertex inequality: alpha(u)+alpha(v)+alpha(w) +
// T(u,v) - T(v,w), with T = O_A + I_A + K21_A.
Rational crucial_lhs(const Orgraph& g, int u, int v, int w);

// ---- saturation and the bound ---------------------------------------------

// Every independent pair (v, w) has paths v->x->w and w->y->v.
bool is_c4_saturated(const Orgraph& g);

// 3 * min out-degree <= n - 1.
bool check_ch(const Orgraph& g);

// An argmin out-degree vertex; throws TheoremContradiction if it breaks the
// bound, and VerifierError(kPrecondition) if g has C3 or a forbidden pattern.
int find_low_outdegree_vertex(const Orgraph& g);

}  // namespace chkit
