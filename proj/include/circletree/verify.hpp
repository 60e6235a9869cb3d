#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "circletree/census.hpp"
#include "circletree/census_cache.hpp"
#include "circletree/egraph.hpp"
#include "circletree/form_catalog.hpp"
#include "circletree/lr_series.hpp"

namespace circletree {

struct VerifyLine {
  std::string claim;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyLine> lines;
  bool all_pass() const {
    for (const VerifyLine& l : lines)
      if (!l.pass) return false;
    return true;
  }
};

namespace detail {

struct VerifyAccumulator {
  std::uint64_t trees = 0;
  std::uint64_t genus_one = 0;
  std::uint64_t equivalence_violations = 0;
  std::uint64_t genus0_violations = 0;
  std::uint64_t egraph_violations = 0;
  std::uint64_t orbit_violations = 0;
  std::uint64_t half_form_violations = 0;
  std::uint64_t mirror_violations = 0;
  std::uint64_t class_count = 0;
  std::uint64_t labeled_from_orbits = 0;
  std::string first_note;

  void note(const std::string& msg) {
    if (first_note.empty()) first_note = msg;
  }
  void merge(const VerifyAccumulator& o) {
    trees += o.trees;
    genus_one += o.genus_one;
    equivalence_violations += o.equivalence_violations;
    genus0_violations += o.genus0_violations;
    egraph_violations += o.egraph_violations;
    orbit_violations += o.orbit_violations;
    half_form_violations += o.half_form_violations;
    mirror_violations += o.mirror_violations;
    class_count += o.class_count;
    labeled_from_orbits += o.labeled_from_orbits;
    if (first_note.empty()) first_note = o.first_note;
  }
};

inline bool egraph_edges_form_tree(const EGraph& eg) {
  const EdgeList edges = eg.all_edges();
  const std::vector<int> pts = eg.points();
  if (edges.size() + 1 != pts.size()) return false;
  std::map<int, int> comp;
  for (std::size_t i = 0; i < pts.size(); ++i) comp[pts[i]] = static_cast<int>(i);
  std::vector<int> parent(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) parent[i] = static_cast<int>(i);
  const std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : edges) {
    const int ra = find(comp[e.a]), rb = find(comp[e.b]);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

inline std::string format_tree_edges(const SmallTree& st) {
  std::ostringstream os;
  os << "n=" << st.n << ";edges=";
  for (int e = 0; e < st.m; ++e) {
    if (e) os << ",";
    os << int(st.ea[e]) << "-" << int(st.eb[e]);
  }
  return os.str();
}

// All structural claims about the e-graphs of one genus-one tree.
inline void check_egraph_structure(const SmallTree& st, VerifyAccumulator& acc) {
  const CircleTree tree = to_circle_tree(st);
  const CircleGraph& g = tree.graph();
  const int n = g.points();

  EReductionResult er = e_reduce(tree);
  bool bad = false;
  std::string why;

  // each e-graph is a tree; e-graphs pairwise vertex-disjoint
  std::vector<int> owner(n + 1, -1);
  for (std::size_t i = 0; i < er.egraphs.size() && !bad; ++i) {
    if (!egraph_edges_form_tree(er.egraphs[i])) {
      bad = true;
      why = "e-graph is not a tree";
      break;
    }
    for (int p : er.egraphs[i].points()) {
      if (owner[p] != -1) {
        bad = true;
        why = "e-graphs share a vertex";
        break;
      }
      owner[p] = static_cast<int>(i);
    }
  }

  // at most two pairwise-parallel e-graphs
  if (!bad) {
    std::map<EdgeList, int> parallel_groups;
    for (const EGraph& eg : er.egraphs) ++parallel_groups[cross_set(g, eg.parallel.front())];
    for (const auto& [key, count] : parallel_groups)
      if (count > 2) {
        bad = true;
        why = "three pairwise-parallel e-graphs";
      }
  }

  for (const EGraph& eg : er.egraphs) {
    if (bad) break;
    std::set<Edge> members(eg.parallel.begin(), eg.parallel.end());
    members.insert(eg.uncrossed.begin(), eg.uncrossed.end());
    for (const Edge& e : g.edges()) {
      const bool inside = (eg.arcs[0].contains(e.a) || eg.arcs[1].contains(e.a)) &&
                          (eg.arcs[0].contains(e.b) || eg.arcs[1].contains(e.b));
      if (inside && !members.count(e)) {
        bad = true;
        why = "edge with both endpoints on the arcs is outside the e-graph";
        break;
      }
      // open arc to open gap is forbidden
      auto strictly_inside_arc = [&](int p) {
        for (const Arc& a : eg.arcs)
          if (a.contains(p) && p != a.from && p != a.to) return true;
        return false;
      };
      auto in_gap = [&](int p) { return !eg.arcs[0].contains(p) && !eg.arcs[1].contains(p); };
      if ((strictly_inside_arc(e.a) && in_gap(e.b)) || (strictly_inside_arc(e.b) && in_gap(e.a))) {
        bad = true;
        why = "edge joins an open arc to an open gap";
        break;
      }
    }
  }

  if (!bad && genus(er.reduced) != 1) {
    bad = true;
    why = "reduced form does not have genus one";
  }
  const CanonicalForm reduced_canon = canonicalize(er.reduced);
  if (!bad && catalog().find_reduced(reduced_canon) == nullptr) {
    bad = true;
    why = "reduced form missing from the 19-form catalog";
  }
  if (!bad) {
    const auto off_t = match_final_form(g);
    const auto off_t2 = match_final_form(er.prereduced);
    if (off_t.canonical != off_t2.canonical ||
        (off_t2.kind != FinalFormVerdict::Kind::Form1 &&
         off_t2.kind != FinalFormVerdict::Kind::Form2)) {
      bad = true;
      why = "pre-reduced form has a different final offspring";
    }
  }
  if (bad) {
    ++acc.egraph_violations;
    acc.note(why + " (tree " + format_tree_edges(st) + ")");
  }
}

}  // namespace detail

// Exhaustive per-n verification over every labeled tree. `deep` additionally
// runs the e-graph, orbit and mirror checks (used for n <= 8).
inline detail::VerifyAccumulator verify_pass(int n, bool deep, int jobs_hint = 0) {
  using namespace detail;
  if (deep) catalog();
  const std::set<std::string> half_forms = [] {
    std::set<std::string> out;
    for (const FormEntry& f : catalog().reduced())
      if (2 * f.period == f.points) out.insert(f.id);
    return out;
  }();

  const int len = n - 2;
  std::uint64_t shard_count = 1;
  for (int i = 0; i < std::min(len, 2); ++i) shard_count *= static_cast<std::uint64_t>(n);
  int jobs = jobs_hint > 0 ? jobs_hint : static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  if (static_cast<std::uint64_t>(jobs) > shard_count) jobs = static_cast<int>(shard_count);

  std::vector<VerifyAccumulator> acc(jobs);
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      VerifyAccumulator& a = acc[w];
      for (std::uint64_t shard = w; shard < shard_count; shard += jobs) {
        for_each_tree_in_shard(n, shard, shard_count, [&](const SmallTree& t) {
          ++a.trees;
          const int size = final_offspring_size(t);
          const bool reduced_one = size == 2 || size == 3;
          const int gen = genus_fast(t);
          if (reduced_one != (gen == 1)) {
            ++a.equivalence_violations;
            a.note("equivalence fails for " + format_tree_edges(t));
          }
          if ((gen == 0) != (size == 0)) {
            // size 0 means every edge was deleted as uncrossed: no crossings
            ++a.genus0_violations;
            a.note("genus-0/crossing-free mismatch for " + format_tree_edges(t));
          }
          if (!reduced_one) return;
          ++a.genus_one;
          if (!deep) return;

          check_egraph_structure(t, a);

          int period = 0;
          if (!rotation_representative(t, period)) return;
          ++a.class_count;
          a.labeled_from_orbits += static_cast<std::uint64_t>(period);
          if (period != n && 2 * period != n) {
            ++a.orbit_violations;
            a.note("period " + std::to_string(period) + " for " + format_tree_edges(t));
          }
          const CircleTree tree = to_circle_tree(t);
          const std::string form = classify_tree(tree);
          if (2 * period == n && !half_forms.count(form)) {
            ++a.half_form_violations;
            a.note("half period outside the half-period forms: " + format_tree_edges(t));
          }
          // mirror image: same genus, same period, mirror-paired form
          const CircleGraph mirrored = reflect(tree.graph());
          const CircleTree mirror_tree(mirrored);
          if (!is_genus_one(mirrored) || min_period(mirrored) != period ||
              classify_tree(mirror_tree) != form_metadata(form).mirror) {
            ++a.mirror_violations;
            a.note("mirror census mismatch for " + format_tree_edges(t));
          }
        });
      }
    });
  }
  for (auto& t : workers) t.join();
  VerifyAccumulator total;
  for (const auto& a : acc) total.merge(a);
  return total;
}

// Runs every exhaustive claim for 4 <= n <= n_max and reports pass/fail per
// claim. Slow mode adds the n = 9 equivalence sweep and the n = 9/10 census
// results; census rows go through the cache when a directory is given.
inline VerifyReport verify_suite(int n_max, bool slow = false, CensusOptions options = {},
                                 const std::optional<std::filesystem::path>& cache_dir = {}) {
  VerifyReport report;
  auto add = [&](const std::string& claim, bool pass, const std::string& detail) {
    report.lines.push_back({claim, pass, detail});
  };

  try {
    catalog();
    add("catalog derivation: 7 pre-reduced and 19 reduced forms with pinned structure", true,
        "");
  } catch (const std::exception& e) {
    add("catalog derivation: 7 pre-reduced and 19 reduced forms with pinned structure", false,
        e.what());
    return report;
  }

  for (int n = 4; n <= std::min(n_max, 8); ++n) {
    const auto acc = verify_pass(n, /*deep=*/true, options.jobs);
    const std::string suffix = " (n=" + std::to_string(n) + ")";
    add("genus-reduction equivalence over all labeled trees" + suffix,
        acc.equivalence_violations == 0,
        std::to_string(acc.trees) + " trees, " + std::to_string(acc.genus_one) + " genus one" +
            (acc.equivalence_violations ? "; " + acc.first_note : ""));
    add("genus zero iff crossing-free" + suffix, acc.genus0_violations == 0, acc.first_note);
    add("e-graph structure and catalog closure on genus-one trees" + suffix,
        acc.egraph_violations == 0, acc.egraph_violations ? acc.first_note : "");
    add("orbit periods in {n, n/2} with half periods on half-period forms" + suffix,
        acc.orbit_violations == 0 && acc.half_form_violations == 0,
        std::to_string(acc.class_count) + " classes" +
            ((acc.orbit_violations || acc.half_form_violations) ? "; " + acc.first_note : ""));
    add("mirror census matches catalog mirror pairs" + suffix, acc.mirror_violations == 0,
        acc.mirror_violations ? acc.first_note : "");
    add("sum of orbit sizes equals f(n)" + suffix, acc.labeled_from_orbits == acc.genus_one,
        "f(" + std::to_string(n) + ")=" + std::to_string(acc.genus_one));

    const auto verdict = classify_n(n);
    const bool expect_divisible = verdict.verdict == DivisibilityVerdict::Kind::DivisibleByN;
    const std::uint64_t mod = acc.genus_one % static_cast<std::uint64_t>(n);
    add("divisibility of f(n) matches classify_n" + suffix,
        expect_divisible == (mod == 0),
        "f mod n = " + std::to_string(mod) + ", classify_n: " + to_string(verdict.verdict));
  }

  if (slow && n_max >= 9) {
    const auto acc = verify_pass(9, /*deep=*/false, options.jobs);
    add("genus-reduction equivalence over all labeled trees (n=9, slow)",
        acc.equivalence_violations == 0,
        std::to_string(acc.trees) + " trees, " + std::to_string(acc.genus_one) + " genus one");
    add("f(9) divisible by 9 (slow)", acc.genus_one % 9 == 0,
        "f(9)=" + std::to_string(acc.genus_one));
  }
  if (slow && n_max >= 10) {
    CensusOptions opts = options;
    const CensusCacheRow row = census_summary(10, opts, cache_dir);
    add("f(10) = 5 (mod 10) (slow)", row.f_mod_n == 5,
        "f(10)=" + std::to_string(row.f_n) + ", mod=" + std::to_string(row.f_mod_n));
    add("|P_10| odd (slow)", row.p_n >= 0 && row.p_n % 2 == 1, "p_10=" + std::to_string(row.p_n));
    add("f(10) = |P_10| * 5 (mod 10) (slow)",
        row.p_n >= 0 && row.f_mod_n == static_cast<std::uint64_t>(row.p_n) * 5 % 10, "");
    add("classify_n(10) reports OnlyByHalf (slow)",
        classify_n(10).verdict == DivisibilityVerdict::Kind::OnlyByHalf, "");
  }
  return report;
}

}  // namespace circletree
