#include "chkit/flags.hpp"

#include <algorithm>
#include <numeric>

namespace chkit {
namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Does mapping F's free vertices (in order) onto `chosen` complete `labels` to
// a copy of F?
bool realizes(const Flag& f, const Orgraph& g, std::span<const int> labels, std::span<const int> chosen) {
  const auto& fg = f.graph();
  const auto& theta = f.theta();
  const auto& free = f.free_vertices();
  for (std::size_t i = 0; i < free.size(); ++i) {
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (fg.relation(free[i], theta[j]) != g.relation(chosen[i], labels[j])) return false;
    }
    for (std::size_t j = i + 1; j < free.size(); ++j) {
      if (fg.relation(free[i], free[j]) != g.relation(chosen[i], chosen[j])) return false;
    }
  }
  return true;
}

void validate_labels(const Orgraph& g, const TypeSpec& sigma, std::span<const int> labels) {
  if (static_cast<int>(labels.size()) != sigma.size()) {
    throw FlagError(FlagError::Kind::kBadLabels, "type " + sigma.name() + " needs " +
                                                     std::to_string(sigma.size()) + " labels");
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0 || labels[i] >= g.size()) {
      throw FlagError(FlagError::Kind::kBadLabels, "label vertex " + std::to_string(labels[i]) + " out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (labels[i] == labels[j]) throw FlagError(FlagError::Kind::kBadLabels, "labels must be distinct");
    }
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (i != j && g.relation(labels[i], labels[j]) !=
                        sigma.graph().relation(static_cast<int>(i), static_cast<int>(j))) {
        throw FlagError(FlagError::Kind::kLabelsDoNotInduceType, "labels do not induce type " + sigma.name());
      }
    }
  }
}

void require_c3_free(const Orgraph& g) {
  if (!is_c3_free(g)) throw FlagError(FlagError::Kind::kNotC3Free, "graph contains a directed triangle");
}

Flag make_flag(std::string name, const TypeSpec& sigma, int n, std::initializer_list<Edge> edges,
               std::string note) {
  std::vector<int> theta(sigma.size());
  std::iota(theta.begin(), theta.end(), 0);
  return Flag(std::move(name), sigma, Orgraph::from_edges(n, edges), std::move(theta), std::move(note));
}

}  // namespace

TypeSpec::TypeSpec(std::string name, Orgraph graph) : name_(std::move(name)), graph_(std::move(graph)) {
  if (!is_c3_free(graph_)) throw FlagError(FlagError::Kind::kInvalidType, "type " + name_ + " contains C3");
}

namespace types {
TypeSpec empty() { return TypeSpec("0", Orgraph(0)); }
TypeSpec vertex() { return TypeSpec("1", Orgraph(1)); }
TypeSpec arc() { return TypeSpec("A", Orgraph::from_edges(2, {{0, 1}})); }
TypeSpec independent() { return TypeSpec("N", Orgraph(2)); }
TypeSpec path() { return TypeSpec("P", Orgraph::from_edges(3, {{0, 1}, {1, 2}})); }
}  // namespace types

Flag::Flag(std::string name, TypeSpec sigma, Orgraph graph, std::vector<int> theta, std::string note)
    : name_(std::move(name)),
      sigma_(std::move(sigma)),
      graph_(std::move(graph)),
      theta_(std::move(theta)),
      note_(std::move(note)) {
  if (!is_c3_free(graph_)) throw FlagError(FlagError::Kind::kInvalidFlag, "flag " + name_ + " contains C3");
  try {
    validate_labels(graph_, sigma_, theta_);
  } catch (const FlagError& e) {
    throw FlagError(FlagError::Kind::kInvalidFlag, "flag " + name_ + ": " + e.what());
  }
  VertexSet labeled;
  for (int v : theta_) labeled.insert(v);
  free_ = (graph_.vertices() - labeled).to_vector();
}

namespace flags {

Flag alpha() { return make_flag("alpha", types::vertex(), 2, {{0, 1}}, "directed edge with its tail labeled"); }

Flag o_a() {
  return make_flag("o_a", types::arc(), 3, {{0, 1}, {0, 2}, {1, 2}}, "free vertex receives edges from both labels");
}

Flag o_p() {
  return make_flag("o_p", types::path(), 4, {{0, 1}, {1, 2}, {0, 3}, {1, 3}, {2, 3}},
                   "free vertex receives edges from all three labels");
}

Flag ohat_a() {
  // Vertex 2 is x, vertex 3 is y (label 3 of o_p with its label dropped).
  return make_flag("ohat_a", types::arc(), 4, {{0, 1}, {1, 3}, {0, 2}, {1, 2}, {3, 2}}, "o_p with label 3 unlabeled");
}

Flag i_a() {
  return make_flag("i_a", types::arc(), 3, {{0, 1}, {2, 0}, {2, 1}}, "x sends edges to both labels");
}

Flag k21_a() { return make_flag("k21_a", types::arc(), 3, {{0, 1}, {2, 1}}, "x->2, x independent of 1"); }

Flag p3_a() { return make_flag("p3_a", types::arc(), 3, {{0, 1}, {1, 2}}, "2->x, x independent of 1"); }

Flag k21_n() { return make_flag("k21_n", types::independent(), 3, {{0, 2}, {1, 2}}, "common out-neighbor"); }

Flag p3_n() { return make_flag("p3_n", types::independent(), 3, {{0, 2}, {2, 1}}, "path 1->x->2"); }

std::optional<Flag> by_name(std::string_view name) {
  if (name == "alpha") return alpha();
  if (name == "o_a") return o_a();
  if (name == "o_p") return o_p();
  if (name == "ohat_a") return ohat_a();
  if (name == "i_a") return i_a();
  if (name == "k21_a") return k21_a();
  if (name == "p3_a") return p3_a();
  if (name == "k21_n") return k21_n();
  if (name == "p3_n") return p3_n();
  return std::nullopt;
}

std::vector<std::string> names() { return {"alpha", "o_a", "o_p", "ohat_a", "i_a", "k21_a", "p3_a", "k21_n", "p3_n"}; }

}  // namespace flags

std::int64_t count_realizations(const Flag& f, const Orgraph& g, std::span<const int> labels,
                                const VertexSet& excluded) {
  VertexSet available = g.vertices() - excluded;
  for (int v : labels) available.erase(v);
  const auto& free = f.free_vertices();

  if (free.size() == 1) {
    const int x = free[0];
    for (std::size_t j = 0; j < labels.size(); ++j) {
      const int l = labels[j];
      switch (f.graph().relation(x, f.theta()[j])) {
        case Relation::kForward: available &= g.in_neighbors(l); break;
        case Relation::kBackward: available &= g.out_neighbors(l); break;
        case Relation::kNone: available -= g.in_neighbors(l) | g.out_neighbors(l); break;
      }
    }
    return available.size();
  }

  const auto pool = available.to_vector();
  const std::size_t want = free.size();
  if (pool.size() < want) return 0;
  std::int64_t count = 0;
  // Each subset is tried under every assignment of free vertices to it.
  std::vector<bool> pick(pool.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(want), true);
  std::vector<int> chosen;
  do {
    chosen.clear();
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (pick[i]) chosen.push_back(pool[i]);
    std::sort(chosen.begin(), chosen.end());
    bool hit = false;
    do {
      hit = realizes(f, g, labels, chosen);
    } while (!hit && std::next_permutation(chosen.begin(), chosen.end()));
    if (hit) ++count;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return count;
}

Rational density(const Flag& f, const Flag& big) {
  if (!(f.type() == big.type())) {
    throw FlagError(FlagError::Kind::kTypeMismatch,
                    "flags " + f.name() + " and " + big.name() + " have different types");
  }
  const int k = f.type().size();
  const std::int64_t space = binomial(big.size() - k, f.size() - k);
  if (space == 0) throw FlagError(FlagError::Kind::kEmptySampleSpace, "flag " + f.name() + " is larger than host");
  return Rational(count_realizations(f, big.graph(), big.theta()), space);
}

Rational relative_density(const Flag& f, const Orgraph& g, std::span<const int> labels) {
  validate_labels(g, f.type(), labels);
  require_c3_free(g);
  const int k = f.type().size();
  const std::int64_t space = binomial(g.size() - k, f.size() - k);
  if (space == 0) throw FlagError(FlagError::Kind::kEmptySampleSpace, "no room for free vertices");
  return Rational(count_realizations(f, g, labels), space);
}

Rational restricted_density(const Flag& f, const Orgraph& g, std::span<const int> labels,
                            std::span<const int> excluded) {
  if (f.free_vertices().size() != 1) {
    throw FlagError(FlagError::Kind::kNotSingleFreeVertex, "flag " + f.name() + " has more than one free vertex");
  }
  validate_labels(g, f.type(), labels);
  require_c3_free(g);
  VertexSet out;
  for (int v : excluded) {
    if (v < 0 || v >= g.size()) throw FlagError(FlagError::Kind::kBadLabels, "excluded vertex out of range");
    if (std::find(labels.begin(), labels.end(), v) != labels.end()) {
      throw FlagError(FlagError::Kind::kBadLabels, "excluded vertex " + std::to_string(v) + " is a label");
    }
    out.insert(v);
  }
  const std::int64_t space = g.size() - static_cast<std::int64_t>(labels.size()) - out.size();
  if (space <= 0) throw FlagError(FlagError::Kind::kEmptySampleSpace, "no vertex left to sample");
  return Rational(count_realizations(f, g, labels, out), space);
}

bool flags_isomorphic(const Flag& a, const Flag& b) {
  if (!(a.type() == b.type()) || a.size() != b.size()) return false;
  std::vector<int> target = b.free_vertices();
  do {
    if (realizes(a, b.graph(), b.theta(), target)) return true;
  } while (std::next_permutation(target.begin(), target.end()));
  return false;
}

std::vector<Flag> flags_of_type(const TypeSpec& sigma, int flag_size) {
  const int k = sigma.size();
  if (flag_size < k) throw FlagError(FlagError::Kind::kEmptySampleSpace, "flag size below type size");
  std::vector<Edge> slots;  // vertex pairs touching a free vertex
  for (int j = k; j < flag_size; ++j)
    for (int i = 0; i < j; ++i) slots.emplace_back(i, j);

  std::vector<Flag> result;
  std::vector<int> state(slots.size(), 0);
  std::vector<int> theta(k);
  std::iota(theta.begin(), theta.end(), 0);
  while (true) {
    OrgraphBuilder b(flag_size);
    for (const auto& [u, v] : sigma.graph().edges()) b.add_edge(u, v);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (state[s] == 1) b.add_edge(slots[s].first, slots[s].second);
      if (state[s] == 2) b.add_edge(slots[s].second, slots[s].first);
    }
    Orgraph g = b.build();
    if (is_c3_free(g)) {
      Flag candidate(sigma.name() + "#" + std::to_string(result.size()), sigma, std::move(g), theta);
      if (std::none_of(result.begin(), result.end(),
                       [&](const Flag& seen) { return flags_isomorphic(seen, candidate); })) {
        result.push_back(std::move(candidate));
      }
    }
    std::size_t s = 0;
    while (s < state.size() && state[s] == 2) state[s++] = 0;
    if (s == state.size()) break;
    ++state[s];
  }
  return result;
}

bool check_normalization(const Orgraph& g, const TypeSpec& sigma, std::span<const int> labels, int flag_size) {
  if (flag_size != sigma.size() + 1) {
    throw FlagError(FlagError::Kind::kNotSingleFreeVertex, "normalization is checked for one free vertex");
  }
  Rational total = 0;
  for (const auto& f : flags_of_type(sigma, flag_size)) total += relative_density(f, g, labels);
  return total == Rational(1);
}

}  // namespace chkit
