#include "chkit/enumerator.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <thread>

namespace chkit {
namespace {

constexpr int kHardMaxN = 9;  // 36 pairs: 3^36 < 2^58
constexpr int kSizeShift = 58;

bool hereditary_ok(const Orgraph& g, const EnumConstraints& c) {
  if (c.require_c3_free && !is_c3_free(g)) return false;
  return is_pattern_free(g, c.forbidden_induced, true);
}

// Children of one canonical parent on k vertices, as packed canonical codes.
void extend(const Orgraph& parent, const EnumConstraints& c, std::vector<std::uint64_t>& out) {
  const int k = parent.size();
  std::int64_t total = 1;
  for (int i = 0; i < k; ++i) total *= 3;
  const auto parent_edges = parent.edges();
  std::set<std::uint64_t> seen;
  std::vector<int> rel(k);
  for (std::int64_t r = 0; r < total; ++r) {
    // Vertex 0 is the most significant digit: 0 none, 1 x->i, 2 i->x.
    std::int64_t rest = r;
    for (int i = k - 1; i >= 0; --i) {
      rel[i] = static_cast<int>(rest % 3);
      rest /= 3;
    }
    if (c.require_c3_free) {
      VertexSet outs, ins;
      for (int i = 0; i < k; ++i) {
        if (rel[i] == 1) outs.insert(i);
        if (rel[i] == 2) ins.insert(i);
      }
      bool triangle = false;
      outs.for_each([&](int a) { triangle = triangle || !(parent.out_neighbors(a) & ins).empty(); });
      if (triangle) continue;
    }
    OrgraphBuilder b(k + 1);
    for (const auto& [u, v] : parent_edges) b.add_edge(u, v);
    for (int i = 0; i < k; ++i) {
      if (rel[i] == 1) b.add_edge(k, i);
      if (rel[i] == 2) b.add_edge(i, k);
    }
    Orgraph child = b.build();
    if (!is_pattern_free(child, c.forbidden_induced, true)) continue;

    const CanonicalLabeling canon = canonical_labeling(child);
    const int last = static_cast<int>(std::find(canon.labeling.begin(), canon.labeling.end(), k) -
                                      canon.labeling.begin());
    if (canon.orbit[last] != canon.orbit[k]) continue;
    const std::uint64_t code = pack_code(canon.form);
    if (seen.insert(code).second) out.push_back(code);
  }
}

std::vector<std::uint64_t> next_level(const std::vector<std::uint64_t>& parents, const EnumConstraints& c,
                                      int jobs) {
  jobs = std::max(1, jobs);
  std::vector<std::vector<std::uint64_t>> partial(jobs);
  auto work = [&](int t) {
    for (std::size_t i = t; i < parents.size(); i += jobs) extend(unpack_code(parents[i]), c, partial[t]);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(work, t);
    for (auto& th : threads) th.join();
  }
  std::vector<std::uint64_t> merged;
  for (auto& p : partial) merged.insert(merged.end(), p.begin(), p.end());
  std::sort(merged.begin(), merged.end());
  return merged;
}

}  // namespace

int max_enumeration_size() {
  int cap = 8;
  if (const char* env = std::getenv("CHKIT_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) cap = static_cast<int>(std::min<long>(v, kHardMaxN));
  }
  return cap;
}

std::uint64_t pack_code(const Orgraph& g) {
  if (g.size() > kHardMaxN) throw EnumerationError("pack_code supports at most 9 vertices");
  std::uint64_t value = 0;
  for (unsigned char s : pair_code(g)) value = value * 3 + s;
  return (static_cast<std::uint64_t>(g.size()) << kSizeShift) | value;
}

Orgraph unpack_code(std::uint64_t code) {
  const int n = static_cast<int>(code >> kSizeShift);
  std::uint64_t value = code & ((std::uint64_t{1} << kSizeShift) - 1);
  std::vector<unsigned char> states(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (auto it = states.rbegin(); it != states.rend(); ++it) {
    *it = static_cast<unsigned char>(value % 3);
    value /= 3;
  }
  OrgraphBuilder b(n);
  std::size_t idx = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++idx) {
      if (states[idx] == 1) b.add_edge(i, j);
      if (states[idx] == 2) b.add_edge(j, i);
    }
  }
  return b.build();
}

std::vector<Orgraph> enumerate(const EnumConstraints& c, int jobs) {
  if (c.n < 1) throw EnumerationError("n must be >= 1");
  if (c.n > max_enumeration_size()) {
    throw EnumerationError("n=" + std::to_string(c.n) + " exceeds the enumeration cap of " +
                           std::to_string(max_enumeration_size()) + " (set CHKIT_MAX_N to raise it)");
  }
  std::vector<std::uint64_t> level;
  const Orgraph single(1);
  if (hereditary_ok(single, c)) level.push_back(pack_code(single));
  for (int k = 1; k < c.n && !level.empty(); ++k) level = next_level(level, c, jobs);

  std::vector<Orgraph> result;
  result.reserve(level.size());
  for (auto code : level) {
    Orgraph g = unpack_code(code);
    if (c.min_outdegree_lower_bound && g.min_out_degree() < *c.min_outdegree_lower_bound) continue;
    result.push_back(std::move(g));
  }
  return result;
}

bool ChReport::passed() const {
  return std::all_of(levels.begin(), levels.end(), [](const ChLevel& l) { return l.failures.empty(); });
}

ChReport verify_ch_up_to(int n_max, int jobs) {
  if (n_max > 7) throw EnumerationError("verify_ch_up_to supports n_max <= 7");
  ChReport report;
  for (int n = 1; n <= n_max; ++n) {
    ChLevel level;
    level.n = n;
    for (auto& g : enumerate({n, true, {}, std::nullopt}, jobs)) {
      ++level.classes;
      if (!check_ch(g)) level.failures.push_back(g);
      if (n % 3 == 1 && n > 1 && 3 * g.min_out_degree() == n - 1) level.extremal.push_back(g);
    }
    report.levels.push_back(std::move(level));
  }
  return report;
}

bool ClaimsReport::passed() const {
  return std::all_of(claims.begin(), claims.end(), [](const auto& kv) { return kv.second.violations.empty(); });
}

ClaimsReport verify_claims_up_to(int n_max, int jobs) {
  if (n_max > 7) throw EnumerationError("verify_claims_up_to supports n_max <= 7");
  ClaimsReport report;
  for (const auto& name : claim_names()) report.claims[name];
  for (int n = 4; n <= n_max; ++n) {
    const auto graphs = enumerate({n, true, patterns::ch3_forbidden(), std::nullopt}, jobs);
    report.classes_per_n[n] = static_cast<std::int64_t>(graphs.size());
    for (const auto& g : graphs) {
      for (auto& r : check_all_claims(g)) {
        auto& totals = report.claims[r.claim];
        ++totals.graphs_checked;
        totals.instances += r.instances;
        for (const auto& [layer, count] : r.layer_instances) totals.layer_instances[layer] += count;
        for (auto& v : r.violations) totals.violations.emplace_back(g, std::move(v));
        if (!r.preconditions_ok) {
          totals.violations.emplace_back(g, Violation{{}, {}, "precondition: " + r.precondition_failure});
        }
      }
    }
  }
  return report;
}

std::optional<Orgraph> search_counterexample(int n, std::span<const Pattern> patterns, int jobs) {
  EnumConstraints c{n, true, {patterns.begin(), patterns.end()}, (n - 1) / 3 + 1};
  auto found = enumerate(c, jobs);
  if (found.empty()) return std::nullopt;
  return found.front();
}

}  // namespace chkit
