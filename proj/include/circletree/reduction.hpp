#pragma once

#include <random>
#include <utility>
#include <vector>

#include "circletree/circle_graph.hpp"

namespace circletree {

// Marcus reduction: repeatedly delete uncrossed edges (operation 1) and all
// but one of each parallel class (operation 2) until neither applies. The
// final offspring does not depend on the schedule.

struct ReductionStep {
  enum class Op { DeleteUncrossed, CollapseParallel };
  Op op;
  EdgeList removed;
};

using ReductionTrace = std::vector<ReductionStep>;

inline EdgeList uncrossed_edges(const CircleGraph& g) {
  const auto cs = detail::cross_index_sets(g);
  EdgeList out;
  for (int i = 0; i < g.edge_count(); ++i)
    if (cs[i].empty()) out.push_back(g.edges()[i]);
  return out;
}

// Deterministic schedule: delete every uncrossed edge, then collapse every
// parallel class to its outermost representative, repeat to the fixpoint.
inline std::pair<CircleGraph, ReductionTrace> final_offspring(const CircleGraph& g) {
  CircleGraph cur = g;
  ReductionTrace trace;
  for (;;) {
    EdgeList loose = uncrossed_edges(cur);
    if (!loose.empty()) {
      trace.push_back({ReductionStep::Op::DeleteUncrossed, loose});
      cur = cur.without(loose);
      continue;
    }
    bool collapsed = false;
    for (const EdgeList& cls : parallel_classes(cur)) {
      if (cls.size() < 2) continue;
      EdgeList removed(cls.begin() + 1, cls.end());
      trace.push_back({ReductionStep::Op::CollapseParallel, removed});
      cur = cur.without(removed);
      collapsed = true;
      break;  // classes may merge; recompute
    }
    if (!collapsed) break;
  }
  return {std::move(cur), std::move(trace)};
}

// Same fixpoint reached through a random interleaving of single-edge
// deletions and random class representatives. Confluence checks compare its
// canonical result against the deterministic schedule.
inline CircleGraph final_offspring_random_schedule(const CircleGraph& g, std::mt19937& rng) {
  CircleGraph cur = g;
  for (;;) {
    EdgeList loose = uncrossed_edges(cur);
    auto classes = parallel_classes(cur);
    std::erase_if(classes, [](const EdgeList& c) { return c.size() < 2; });
    const std::size_t moves = loose.size() + classes.size();
    if (moves == 0) break;
    std::size_t pick = std::uniform_int_distribution<std::size_t>(0, moves - 1)(rng);
    if (pick < loose.size()) {
      cur = cur.without({loose[pick]});
    } else {
      EdgeList cls = classes[pick - loose.size()];
      const std::size_t keep = std::uniform_int_distribution<std::size_t>(0, cls.size() - 1)(rng);
      cls.erase(cls.begin() + static_cast<long>(keep));
      cur = cur.without(cls);
    }
  }
  return cur;
}

struct FinalFormVerdict {
  enum class Kind { Empty, Form1, Form2, Other };
  Kind kind;
  CanonicalForm canonical;
};

// The two irreducible genus-one final offsprings: a single crossing pair and
// a triple of pairwise-crossing chords.
inline const CanonicalForm& form1() {
  static const CanonicalForm f = canonicalize(CircleGraph(4, {{1, 3}, {2, 4}}));
  return f;
}
inline const CanonicalForm& form2() {
  static const CanonicalForm f = canonicalize(CircleGraph(6, {{1, 4}, {2, 5}, {3, 6}}));
  return f;
}

inline FinalFormVerdict match_final_form(const CircleGraph& g) {
  CanonicalForm canon = canonicalize(final_offspring(g).first);
  FinalFormVerdict v{FinalFormVerdict::Kind::Other, std::move(canon)};
  if (v.canonical.edges.empty())
    v.kind = FinalFormVerdict::Kind::Empty;
  else if (v.canonical == form1())
    v.kind = FinalFormVerdict::Kind::Form1;
  else if (v.canonical == form2())
    v.kind = FinalFormVerdict::Kind::Form2;
  return v;
}

inline bool is_genus_one(const CircleGraph& g) {
  const auto kind = match_final_form(g).kind;
  return kind == FinalFormVerdict::Kind::Form1 || kind == FinalFormVerdict::Kind::Form2;
}

inline const char* to_string(FinalFormVerdict::Kind k) {
  switch (k) {
    case FinalFormVerdict::Kind::Empty: return "Empty";
    case FinalFormVerdict::Kind::Form1: return "Form1";
    case FinalFormVerdict::Kind::Form2: return "Form2";
    default: return "Other";
  }
}

}  // namespace circletree
