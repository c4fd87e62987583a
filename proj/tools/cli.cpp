#include "cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "chkit/augmenter.hpp"
#include "chkit/enumerator.hpp"
#include "chkit/extremal.hpp"
#include "chkit/flags.hpp"
#include "chkit/graph_io.hpp"
#include "chkit/patterns.hpp"
#include "chkit/report_io.hpp"
#include "chkit/tree_spec_io.hpp"
#include "chkit/verifier.hpp"

namespace chkit::cli {
namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Thrown for bad input that parsed as far as CLI11 is concerned.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad vertex list '" + text + "'");
    }
  }
  return out;
}

// Largest minimum out-degree the bound allows: floor((n-1)/3).
int ch_bound(int n) { return n >= 1 ? (n - 1) / 3 : 0; }

int cmd_construct_circulant(int h, std::ostream& out) {
  if (h < 1) throw UsageError("--h must be >= 1");
  write_orgraph(out, circulant(h));
  return kOk;
}

int cmd_construct_lexprod(const std::string& a, const std::string& b, std::ostream& out) {
  write_orgraph(out, lex_product(read_orgraph_file(a), read_orgraph_file(b)));
  return kOk;
}

int cmd_construct_tree(const std::string& path, bool require_uniform, std::ostream& out, std::ostream& err) {
  const TreeSpec tree = read_tree_spec_file(path);
  const WeightedOrgraph w = from_tree_spec(tree);
  const bool uniform = is_uniform(w);
  write_orgraph(out, w.graph);
  for (int v = 0; v < w.graph.size(); ++v) out << "# weight " << v << ' ' << to_string(w.weights[v]) << '\n';
  out << "# uniform " << yes_no(uniform) << '\n';
  out << "# biregular " << yes_no(is_biregular(w)) << '\n';
  if (require_uniform && !uniform) {
    err << "tree spec does not give uniform leaf weights\n";
    return kFailed;
  }
  return kOk;
}

int cmd_check(const std::string& path, std::ostream& out) {
  const Orgraph g = read_orgraph_file(path);
  const bool c3_free = is_c3_free(g);
  const bool ch = check_ch(g);
  out << "n=" << g.size() << '\n';
  out << "edges=" << g.edge_count() << '\n';
  out << "min_out_degree=" << g.min_out_degree() << '\n';
  out << "bound=" << ch_bound(g.size()) << '\n';
  out << "c3_free=" << yes_no(c3_free) << '\n';
  const auto gi = girth(g);
  out << "girth=" << (gi ? std::to_string(*gi) : std::string("none")) << '\n';
  bool pattern_free = true;
  for (const auto& name : patterns::names()) {
    const bool has = contains_induced(g, *patterns::by_name(name));
    out << "induced[" << name << "]=" << yes_no(has) << '\n';
    if (name == "in-pendant" || name == "out-pendant" || name == "twisted-circle") pattern_free = pattern_free && !has;
  }
  out << "ch3_pattern_free=" << yes_no(pattern_free) << '\n';
  out << "ch_holds=" << yes_no(ch) << '\n';
  const bool pass = c3_free && ch;
  out << "RESULT " << (pass ? "pass" : "fail") << " c3_free=" << yes_no(c3_free) << " ch_holds=" << yes_no(ch)
      << '\n';
  return pass ? kOk : kFailed;
}

int cmd_density(const std::string& path, const std::string& flag_name, const std::string& labels,
                const std::string& exclude, std::ostream& out) {
  const Orgraph g = read_orgraph_file(path);
  const auto flag = flags::by_name(flag_name);
  if (!flag) throw UsageError("unknown flag '" + flag_name + "'");
  const auto lab = parse_index_list(labels);
  Rational value;
  if (exclude.empty()) {
    value = relative_density(*flag, g, lab);
  } else {
    value = restricted_density(*flag, g, lab, parse_index_list(exclude));
  }
  out << "density=" << to_string(value) << '\n';
  out << "RESULT pass " << flag_name << '=' << to_string(value) << '\n';
  return kOk;
}

int cmd_claims(const std::string& path, const std::string& claim, std::ostream& out) {
  const Orgraph g = read_orgraph_file(path);
  std::vector<ClaimReport> reports;
  if (claim.empty()) {
    reports = check_all_claims(g);
  } else {
    const auto names = claim_names();
    if (std::find(names.begin(), names.end(), claim) == names.end()) throw UsageError("unknown claim '" + claim + "'");
    reports.push_back(check_claim(g, claim));
  }
  out << format_reports(reports);

  bool precondition = false;
  int failed = 0;
  for (const auto& r : reports) {
    if (r.outcome() == ClaimOutcome::kPrecondition) precondition = true;
    if (r.outcome() == ClaimOutcome::kFail) ++failed;
  }
  if (precondition) {
    out << "RESULT fail precondition: " << reports.front().precondition_failure << '\n';
    return kUsage;
  }
  // Diagnostic only: a critical cycle and its smallest alpha.
  if (g.min_out_degree() > 0) {
    const auto cycle = find_critical_cycle(g);
    const auto alpha = cycle_alpha_report(g, cycle);
    out << "# critical cycle:";
    for (int v : cycle) out << ' ' << v;
    out << "\n# alpha sum " << to_string(alpha.sum) << ", min " << to_string(alpha.min) << " at " << alpha.argmin
        << '\n';
  }
  out << "RESULT " << (failed == 0 ? "pass" : "fail") << " claims=" << reports.size() << " failed=" << failed << '\n';
  return failed == 0 ? kOk : kFailed;
}

int cmd_augment(const std::string& name, bool analysis, std::ostream& out) {
  std::optional<AugmentedPattern> aug = augmented_by_name(name);
  if (!aug) {
    auto base = patterns::by_name(name);
    if (!base) throw UsageError("unknown pattern '" + name + "'");
    if (!is_c3_free(base->graph)) throw UsageError("pattern '" + name + "' contains C3");
    aug = augment(*base);
  }
  out << format_augmented(*aug);
  if (analysis) {
    for (const auto& m : identification_analysis(*aug)) {
      out << "# merge " << aug->added[m.first].vertex << ' ' << aug->added[m.second].vertex << ' '
          << merge_class_name(m.classification);
      for (const auto& c : m.contains) out << " contains=" << c;
      out << '\n';
    }
  }
  return kOk;
}

int cmd_saturated(const std::string& path, std::ostream& out) {
  const Orgraph g = read_orgraph_file(path);
  if (!is_c3_free(g)) throw UsageError("graph contains a directed triangle");
  const bool sat = is_c4_saturated(g);
  out << "c4_saturated=" << yes_no(sat) << '\n';
  out << "RESULT " << (sat ? "pass" : "fail") << " c4_saturated=" << yes_no(sat) << '\n';
  return sat ? kOk : kFailed;
}

int cmd_enumerate(int n, bool c3_free, bool pattern_free, bool verify_ch, bool verify_claims, int jobs,
                  std::ostream& out) {
  if (jobs < 1) throw UsageError("--jobs must be >= 1");
  if (verify_ch) {
    if (n > 7) throw UsageError("--verify-ch supports --n up to 7");
    const ChReport report = verify_ch_up_to(n, jobs);
    std::int64_t failures = 0;
    for (const auto& level : report.levels) {
      out << "n=" << level.n << " classes=" << level.classes << " failures=" << level.failures.size()
          << " extremal=" << level.extremal.size() << '\n';
      failures += static_cast<std::int64_t>(level.failures.size());
    }
    for (const auto& level : report.levels) {
      for (const auto& g : level.extremal) out << "\n# extremal n=" << level.n << '\n' << format_orgraph(g);
      for (const auto& g : level.failures) out << "\n# counterexample n=" << level.n << '\n' << format_orgraph(g);
    }
    out << "RESULT " << (report.passed() ? "pass" : "fail") << " n_max=" << n << " failures=" << failures << '\n';
    return report.passed() ? kOk : kFailed;
  }
  if (verify_claims) {
    if (n > 7) throw UsageError("--verify-claims supports --n up to 7");
    const ClaimsReport report = verify_claims_up_to(n, jobs);
    for (const auto& [size, count] : report.classes_per_n) out << "n=" << size << " classes=" << count << '\n';
    std::size_t violations = 0;
    for (const auto& [name, totals] : report.claims) {
      out << "claim=" << name << " graphs=" << totals.graphs_checked << " instances=" << totals.instances;
      for (const auto& [layer, count] : totals.layer_instances) out << " layer_" << layer << '=' << count;
      out << " violations=" << totals.violations.size() << '\n';
      violations += totals.violations.size();
    }
    for (const auto& [name, totals] : report.claims) {
      for (const auto& [g, v] : totals.violations) out << "\n# violation " << name << ' ' << v.detail << '\n' << format_orgraph(g);
    }
    out << "RESULT " << (report.passed() ? "pass" : "fail") << " n_max=" << n << " violations=" << violations
        << '\n';
    return report.passed() ? kOk : kFailed;
  }
  EnumConstraints c;
  c.n = n;
  c.require_c3_free = c3_free;
  if (pattern_free) c.forbidden_induced = patterns::ch3_forbidden();
  const auto graphs = enumerate(c, jobs);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (i > 0) out << '\n';
    write_orgraph(out, graphs[i]);
  }
  if (!graphs.empty()) out << '\n';
  out << "n=" << n << " classes=" << graphs.size() << '\n';
  out << "RESULT pass n=" << n << " classes=" << graphs.size() << '\n';
  return kOk;
}

int cmd_search(int n, const std::vector<std::string>& dropped, int jobs, std::ostream& out) {
  std::vector<Pattern> kept;
  for (const auto& name : dropped) {
    if (name != "in-pendant" && name != "out-pendant" && name != "twisted-circle") {
      throw UsageError("--drop-pattern takes in-pendant, out-pendant or twisted-circle, got '" + name + "'");
    }
  }
  for (auto& p : patterns::ch3_forbidden()) {
    if (std::find(dropped.begin(), dropped.end(), p.name) == dropped.end()) kept.push_back(std::move(p));
  }
  for (int m = 1; m <= n; ++m) {
    if (auto found = search_counterexample(m, kept, jobs)) {
      out << "n=" << m << " counterexample\n" << format_orgraph(*found);
      out << "RESULT fail counterexample n=" << m << '\n';
      return kFailed;
    }
    out << "n=" << m << " none\n";
  }
  out << "RESULT pass n_max=" << n << " patterns=" << kept.size() << '\n';
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Caccetta-Haggkvist toolkit for oriented graphs (l = 3)", "chkit"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "Build extremal configurations");
  construct->require_subcommand(1);
  int h = 0;
  auto* circ = construct->add_subcommand("circulant", "Circulant orgraph on 3h+1 vertices");
  circ->add_option("--h", h, "Parameter h >= 1")->required();
  std::string lex_a, lex_b;
  auto* lex = construct->add_subcommand("lexprod", "Lexicographic product of two graph files");
  lex->add_option("A", lex_a)->required();
  lex->add_option("B", lex_b)->required();
  std::string tree_path;
  bool require_uniform = false;
  auto* tree = construct->add_subcommand("tree", "Weighted orgraph from a tree spec (JSON)");
  tree->add_option("SPEC", tree_path)->required();
  tree->add_flag("--require-uniform", require_uniform, "Fail unless leaf weights are uniform");

  std::string graph_path;
  auto* check = app.add_subcommand("check", "Report invariants and the out-degree bound");
  check->add_option("GRAPH", graph_path)->required();

  std::string flag_name, labels, exclude;
  auto* density = app.add_subcommand("density", "Flag density relative to labeled vertices");
  density->add_option("GRAPH", graph_path)->required();
  density->add_option("--flag", flag_name)->required();
  density->add_option("--labels", labels)->required();
  density->add_option("--exclude", exclude, "Vertices the free vertex may not take");

  std::string claim;
  auto* claims = app.add_subcommand("claims", "Check the proof's claims on a graph");
  claims->add_option("GRAPH", graph_path)->required();
  claims->add_option("--claim", claim, "ohata, p3a, p3, nok21, induction or crucial");

  std::string pattern;
  bool analysis = false;
  auto* aug = app.add_subcommand("augment", "Augmented (non-induced) forbidden pattern");
  aug->add_option("--pattern", pattern)->required();
  aug->add_flag("--analysis", analysis, "Append the identification analysis as comments");

  auto* saturated = app.add_subcommand("saturated", "Is every independent pair a C4 diagonal?");
  saturated->add_option("GRAPH", graph_path)->required();

  int n = 0;
  int jobs = 1;
  bool c3_free = false, pattern_free = false, verify_ch = false, verify_claims = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Isomorph-free generation");
  enumerate_cmd->add_option("--n", n)->required();
  enumerate_cmd->add_flag("--c3-free", c3_free);
  enumerate_cmd->add_flag("--pattern-free", pattern_free, "Forbid the three induced 4-vertex patterns");
  auto* vch = enumerate_cmd->add_flag("--verify-ch", verify_ch, "Check the bound for all C3-free classes up to n");
  auto* vcl = enumerate_cmd->add_flag("--verify-claims", verify_claims, "Check all claims for 4 <= size <= n");
  vch->excludes(vcl);
  enumerate_cmd->add_option("--jobs", jobs, "Worker threads");

  std::vector<std::string> dropped;
  auto* search = app.add_subcommand("search", "Look for graphs beating the bound");
  search->add_option("--n", n)->required();
  search->add_option("--drop-pattern", dropped, "Pattern to stop forbidding (repeatable)");
  search->add_option("--jobs", jobs, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*circ) return cmd_construct_circulant(h, out);
    if (*lex) return cmd_construct_lexprod(lex_a, lex_b, out);
    if (*tree) return cmd_construct_tree(tree_path, require_uniform, out, err);
    if (*check) return cmd_check(graph_path, out);
    if (*density) return cmd_density(graph_path, flag_name, labels, exclude, out);
    if (*claims) return cmd_claims(graph_path, claim, out);
    if (*aug) return cmd_augment(pattern, analysis, out);
    if (*saturated) return cmd_saturated(graph_path, out);
    if (*enumerate_cmd) return cmd_enumerate(n, c3_free, pattern_free, verify_ch, verify_claims, jobs, out);
    if (*search) return cmd_search(n, dropped, jobs, out);
  } catch (const TheoremContradiction& e) {
    err << "theorem contradiction: " << e.what() << '\n';
    return kFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace chkit::cli
