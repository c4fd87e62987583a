#include "chkit/verifier.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "chkit/flags.hpp"
#include "chkit/patterns.hpp"

namespace chkit {
namespace {

// 3 * od(v) > n - 1, i.e. alpha(v) > 1/3.
bool above_bound(const Orgraph& g, int v) { return 3 * g.out_degree(v) > g.size() - 1; }

std::int64_t count(const Flag& f, const Orgraph& g, std::initializer_list<int> labels, const VertexSet& excluded = {}) {
  return count_realizations(f, g, std::span<const int>(labels.begin(), labels.size()), excluded);
}

// Visits every critical path u->v->w; w != u since g has no anti-parallel pair.
template <typename Visit>
void for_each_critical_path(const Orgraph& g, Visit&& visit) {
  std::vector<std::vector<int>> crit(g.size());
  for (int v = 0; v < g.size(); ++v) crit[v] = critical_successors(g, v);
  for (int u = 0; u < g.size(); ++u)
    for (int v : crit[u])
      for (int w : crit[v]) visit(u, v, w);
}

ClaimReport start_report(const Orgraph& g, std::string name) {
  ClaimReport r;
  r.claim = std::move(name);
  if (auto why = claim_precondition_failure(g)) {
    r.preconditions_ok = false;
    r.precondition_failure = *why;
  }
  return r;
}

struct Fixed {
  Flag alpha = flags::alpha();
  Flag o_a = flags::o_a();
  Flag i_a = flags::i_a();
  Flag k21_a = flags::k21_a();
  Flag p3_a = flags::p3_a();
  Flag k21_n = flags::k21_n();
  Flag p3_n = flags::p3_n();
  Flag ohat_a = flags::ohat_a();
  Orgraph twisted = patterns::twisted_circle().graph;
};

const Fixed& fixed() {
  static const Fixed f;
  return f;
}

}  // namespace

std::vector<int> critical_successors(const Orgraph& g, int v) {
  const VertexSet& out = g.out_neighbors(v);
  int best = std::numeric_limits<int>::max();
  std::vector<int> result;
  out.for_each([&](int w) {
    const int common = (out & g.out_neighbors(w)).size();
    if (common < best) {
      best = common;
      result.clear();
    }
    if (common == best) result.push_back(w);
  });
  return result;
}

CriticalEdgeReport critical_edges(const Orgraph& g) {
  CriticalEdgeReport r;
  for (int v = 0; v < g.size(); ++v) {
    r.out_neighbors.push_back(g.out_neighbors(v).to_vector());
    r.critical.push_back(critical_successors(g, v));
  }
  return r;
}

std::vector<int> find_critical_cycle(const Orgraph& g) {
  if (g.size() == 0) throw VerifierError(VerifierError::Kind::kNoOutEdge, "empty graph");
  for (int v = 0; v < g.size(); ++v) {
    if (g.out_degree(v) == 0) {
      throw VerifierError(VerifierError::Kind::kNoOutEdge, "vertex " + std::to_string(v) + " has no out-edge");
    }
  }
  std::vector<int> position(g.size(), -1);
  std::vector<int> walk;
  int v = 0;
  while (position[v] < 0) {
    position[v] = static_cast<int>(walk.size());
    walk.push_back(v);
    v = critical_successors(g, v).front();
  }
  return {walk.begin() + position[v], walk.end()};
}

CycleAlphaReport cycle_alpha_report(const Orgraph& g, std::span<const int> cycle) {
  if (cycle.empty()) throw VerifierError(VerifierError::Kind::kNotACycle, "empty cycle");
  VertexSet seen;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const int a = cycle[i];
    const int b = cycle[(i + 1) % cycle.size()];
    if (a < 0 || a >= g.size() || seen.contains(a) || b < 0 || b >= g.size() || !g.has_edge(a, b)) {
      throw VerifierError(VerifierError::Kind::kNotACycle, "not a directed cycle at position " + std::to_string(i));
    }
    seen.insert(a);
  }
  CycleAlphaReport r;
  const std::int64_t denom = g.size() - 1;
  for (int v : cycle) {
    Rational a(g.out_degree(v), denom);
    r.sum += a;
    if (r.argmin < 0 || a < r.min) {
      r.min = a;
      r.argmin = v;
    }
  }
  return r;
}

std::optional<std::string> claim_precondition_failure(const Orgraph& g) {
  if (g.size() < 4) return "fewer than 4 vertices";
  if (!is_c3_free(g)) return "contains a directed triangle";
  for (const auto& p : patterns::ch3_forbidden()) {
    if (contains_induced(g, p)) return "contains an induced " + p.name;
  }
  return std::nullopt;
}

ClaimReport check_ohata(const Orgraph& g) {
  ClaimReport r = start_report(g, "ohata");
  if (!r.preconditions_ok) return r;
  const auto& f = fixed();
  for (int v = 0; v < g.size(); ++v) {
    for (int w : critical_successors(g, v)) {
      ++r.instances;
      if (count(f.ohat_a, g, {v, w}) == 0) continue;
      Violation bad{{v, w}, {}, "ohat_a(v,w) > 0"};
      const VertexSet xs = g.out_neighbors(v) & g.out_neighbors(w);
      xs.for_each([&](int x) {
        if (!bad.witness.empty()) return;
        VertexSet ys = g.out_neighbors(w) & g.in_neighbors(x);
        ys -= g.out_neighbors(v) | g.in_neighbors(v);
        ys.erase(v);
        if (!ys.empty()) bad.witness = {x, ys.first()};
      });
      r.violations.push_back(std::move(bad));
    }
  }
  return r;
}

ClaimReport check_p3a(const Orgraph& g) {
  ClaimReport r = start_report(g, "p3a");
  if (!r.preconditions_ok) return r;
  for (int v = 0; v < g.size(); ++v) {
    for (int w : critical_successors(g, v)) {
      if (!above_bound(g, w)) continue;
      ++r.instances;
      if (count(fixed().p3_a, g, {v, w}) == 0) r.violations.push_back({{v, w}, {}, "p3_a(v,w) = 0"});
    }
  }
  return r;
}

ClaimReport check_p3(const Orgraph& g) {
  ClaimReport r = start_report(g, "p3");
  if (!r.preconditions_ok) return r;
  for_each_critical_path(g, [&](int u, int v, int w) {
    if (!above_bound(g, v)) return;
    ++r.instances;
    if (!g.independent(u, w)) r.violations.push_back({{u, v, w}, {}, "u and w adjacent"});
  });
  return r;
}

ClaimReport check_nok21(const Orgraph& g) {
  ClaimReport r = start_report(g, "nok21");
  if (!r.preconditions_ok) return r;
  for_each_critical_path(g, [&](int u, int v, int w) {
    if (!g.independent(u, w)) return;
    ++r.instances;
    if (count(fixed().k21_n, g, {u, w}) == 0) return;
    const int x = (g.out_neighbors(u) & g.out_neighbors(w)).first();
    r.violations.push_back({{u, v, w}, {x}, "k21_n(u,w) > 0"});
  });
  return r;
}

ClaimReport check_induction(const Orgraph& g) {
  ClaimReport r = start_report(g, "induction");
  if (!r.preconditions_ok) return r;
  for_each_critical_path(g, [&](int u, int v, int w) {
    if (!g.independent(u, w)) return;
    ++r.instances;
    // Common denominator n-2: 3 * #O_A(u,v) <= #P3_N(u,w) - 1.
    const auto lhs = 3 * count(fixed().o_a, g, {u, v});
    const auto rhs = count(fixed().p3_n, g, {u, w}) - 1;
    if (lhs > rhs) {
      r.violations.push_back({{u, v, w}, {}, std::to_string(lhs) + " > " + std::to_string(rhs)});
    }
  });
  return r;
}

Rational crucial_lhs(const Orgraph& g, int u, int v, int w) {
  const auto& f = fixed();
  const std::int64_t n = g.size();
  auto t = [&](int a, int b) { return count(f.o_a, g, {a, b}) + count(f.i_a, g, {a, b}) + count(f.k21_a, g, {a, b}); };
  return Rational(g.out_degree(u) + g.out_degree(v) + g.out_degree(w), n - 1) + Rational(t(u, v) - t(v, w), n - 2);
}

ClaimReport check_crucial(const Orgraph& g) {
  ClaimReport r = start_report(g, "crucial");
  if (!r.preconditions_ok) return r;
  const auto& f = fixed();
  const std::int64_t n = g.size();
  r.layer_instances = {{"a", 0}, {"b", 0}};
  for_each_critical_path(g, [&](int u, int v, int w) {
    if (!g.independent(u, w)) return;
    // Layer a: restricted densities share the denominator n-3, so compare the
    // integer combination of counts over x outside {u, v, w} with n-3.
    ++r.layer_instances["a"];
    const VertexSet uvw{u, v, w};
    auto c = [&](const Flag& fl, std::initializer_list<int> labels) { return count(fl, g, labels, uvw); };
    const std::int64_t combo = c(f.alpha, {u}) + c(f.alpha, {v}) + c(f.alpha, {w}) + c(f.i_a, {u, v}) +
                               c(f.k21_a, {u, v}) - 2 * c(f.o_a, {u, v}) - c(f.o_a, {v, w}) - c(f.i_a, {v, w}) -
                               c(f.k21_a, {v, w}) + c(f.p3_n, {u, w});
    if (combo > n - 3) {
      r.violations.push_back({{u, v, w}, {}, "layer a: " + std::to_string(combo) + " > " + std::to_string(n - 3)});
    }
    // Layer b: the full inequality, when alpha(u)+alpha(v)+alpha(w) > 1.
    if (g.out_degree(u) + g.out_degree(v) + g.out_degree(w) <= n - 1) return;
    ++r.layer_instances["b"];
    const Rational lhs = crucial_lhs(g, u, v, w);
    if (lhs > Rational(1)) r.violations.push_back({{u, v, w}, {}, "layer b: lhs " + to_string(lhs) + " > 1"});
  });
  r.instances = r.layer_instances["a"];
  return r;
}

std::vector<std::string> claim_names() { return {"ohata", "p3a", "p3", "nok21", "induction", "crucial"}; }

ClaimReport check_claim(const Orgraph& g, const std::string& name) {
  if (name == "ohata") return check_ohata(g);
  if (name == "p3a") return check_p3a(g);
  if (name == "p3") return check_p3(g);
  if (name == "nok21") return check_nok21(g);
  if (name == "induction") return check_induction(g);
  if (name == "crucial") return check_crucial(g);
  throw std::invalid_argument("unknown claim '" + name + "'");
}

std::vector<ClaimReport> check_all_claims(const Orgraph& g) {
  std::vector<ClaimReport> reports;
  for (const auto& name : claim_names()) reports.push_back(check_claim(g, name));
  return reports;
}

int per_vertex_contribution(const Orgraph& g, int u, int v, int w, int x) {
  const int n = g.size();
  for (int a : {u, v, w, x}) {
    if (a < 0 || a >= n) throw VerifierError(VerifierError::Kind::kPrecondition, "vertex out of range");
  }
  if (!g.has_edge(u, v) || !g.has_edge(v, w) || !g.independent(u, w)) {
    throw VerifierError(VerifierError::Kind::kPrecondition, "need u->v, v->w with u, w independent");
  }
  if (x == u || x == v || x == w) throw VerifierError(VerifierError::Kind::kPrecondition, "x must be outside {u,v,w}");
  if (!is_c3_free(g)) throw VerifierError(VerifierError::Kind::kPrecondition, "graph contains a directed triangle");
  const std::array<int, 4> quad{u, v, w, x};
  if (are_isomorphic(induced_subgraph(g, quad), fixed().twisted)) {
    throw VerifierError(VerifierError::Kind::kPrecondition, "{u,v,w,x} induces a twisted circle");
  }

  auto e = [&](int a, int b) { return g.has_edge(a, b) ? 1 : 0; };
  auto ind = [&](int a, int b) { return g.independent(a, b) ? 1 : 0; };
  return e(u, x) + e(v, x) + e(w, x) + e(x, u) * e(x, v) + ind(x, u) * e(x, v) - 2 * e(u, x) * e(v, x) -
         e(v, x) * e(w, x) - e(x, v) * e(x, w) - ind(x, v) * e(x, w) + e(u, x) * e(x, w);
}

bool is_c4_saturated(const Orgraph& g) {
  for (int v = 0; v < g.size(); ++v) {
    for (int w = v + 1; w < g.size(); ++w) {
      if (!g.independent(v, w)) continue;
      if ((g.out_neighbors(v) & g.in_neighbors(w)).empty()) return false;
      if ((g.out_neighbors(w) & g.in_neighbors(v)).empty()) return false;
    }
  }
  return true;
}

bool check_ch(const Orgraph& g) { return 3 * g.min_out_degree() <= g.size() - 1; }

int find_low_outdegree_vertex(const Orgraph& g) {
  if (g.size() == 0) throw VerifierError(VerifierError::Kind::kPrecondition, "empty graph");
  if (!is_c3_free(g)) throw VerifierError(VerifierError::Kind::kPrecondition, "graph contains a directed triangle");
  for (const auto& p : patterns::ch3_forbidden()) {
    if (contains_induced(g, p)) throw VerifierError(VerifierError::Kind::kPrecondition, "graph contains " + p.name);
  }
  int best = 0;
  for (int v = 1; v < g.size(); ++v)
    if (g.out_degree(v) < g.out_degree(best)) best = v;
  if (3 * g.out_degree(best) > g.size() - 1) {
    throw TheoremContradiction("minimum out-degree " + std::to_string(g.out_degree(best)) + " exceeds (n-1)/3 for n=" +
                               std::to_string(g.size()));
  }
  return best;
}

}  // namespace chkit
