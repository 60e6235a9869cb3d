#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "circletree/egraph.hpp"
#include "helpers.hpp"

using namespace circletree;
using circletree::testing::for_each_prufer_sequence;
using circletree::testing::random_tree;

namespace {
const CircleTree& worked_tree() {
  static const CircleTree t(7, {{1, 4}, {2, 7}, {3, 6}, {4, 5}, {2, 3}, {5, 6}});
  return t;
}
}  // namespace

TEST_CASE("egraph_of: bundle, uncrossed set and arcs") {
  const EGraph eg = egraph_of(worked_tree(), {2, 7});
  CHECK(eg.parallel == EdgeList{{2, 7}, {3, 6}});
  CHECK(eg.uncrossed == EdgeList{{2, 3}});
  CHECK(eg.arcs[0] == Arc{2, 3});
  CHECK(eg.arcs[1] == Arc{6, 7});
  CHECK(eg.outermost == std::pair<Edge, Edge>{{2, 7}, {3, 6}});

  const EGraph single = egraph_of(worked_tree(), {1, 4});
  CHECK(single.parallel == EdgeList{{1, 4}});
  CHECK(single.uncrossed.empty());
  CHECK(single.arcs[0] == Arc{1, 1});
  CHECK(single.arcs[1] == Arc{4, 4});
  CHECK(single.outermost.first == single.outermost.second);
}

TEST_CASE("egraph_of: parallel edges can land in different e-graphs") {
  const CircleTree t(6, {{1, 4}, {2, 6}, {3, 5}, {4, 5}, {1, 2}});
  const EGraph top = egraph_of(t, {2, 6});
  CHECK(top.parallel == EdgeList{{2, 6}});
  const EGraph bottom = egraph_of(t, {3, 5});
  CHECK(bottom.parallel == EdgeList{{3, 5}});
  CHECK(egraph_decomposition(t.graph()).size() == 3);
}

TEST_CASE("egraph_of error cases") {
  CHECK_THROWS_AS(egraph_of(worked_tree(), {4, 5}), DomainError);  // uncrossed
  CHECK_THROWS_AS(egraph_of(worked_tree(), {1, 2}), DomainError);  // absent
}

TEST_CASE("egraph_decomposition examples") {
  CHECK(egraph_decomposition(worked_tree().graph()).size() == 2);
  CHECK(egraph_decomposition(CircleGraph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}})).empty());
}

TEST_CASE("egraph_of is well defined across its bundle") {
  for (int n = 6; n <= 7; ++n)
    for_each_prufer_sequence(n, [&](const std::vector<int>& seq) {
      const CircleTree t = tree_from_prufer(seq);
      if (!is_genus_one(t.graph())) return;
      for (const EGraph& eg : egraph_decomposition(t.graph()))
        for (const Edge& member : eg.parallel)
          CHECK(egraph_of(t, member).all_edges() == eg.all_edges());
    });
}

TEST_CASE("connecting_paths examples") {
  const auto egs = egraph_decomposition(worked_tree().graph());
  const auto paths = connecting_paths(worked_tree(), egs);
  REQUIRE(paths.size() == 1);
  CHECK(paths[0].points == std::vector<int>{4, 5, 6});
  CHECK(paths[0].edges == EdgeList{{4, 5}, {5, 6}});

  const CircleTree small(4, {{1, 3}, {2, 4}, {1, 2}});
  const auto small_paths = connecting_paths(small, egraph_decomposition(small.graph()));
  REQUIRE(small_paths.size() == 1);
  CHECK(small_paths[0].edges == EdgeList{{1, 2}});

  const CircleTree crossing_free(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
  CHECK(connecting_paths(crossing_free, egraph_decomposition(crossing_free.graph())).empty());
}

TEST_CASE("e_reduce on the worked examples") {
  const EReductionResult er = e_reduce(worked_tree());
  CHECK(er.prereduced.edges() == EdgeList{{1, 4}, {2, 7}});
  CHECK(er.reduced.edges() == EdgeList{{1, 4}, {2, 7}, {4, 7}});
  CHECK(er.added_edges == EdgeList{{4, 7}});
  CHECK(canonicalize(er.reduced).edges == EdgeList{{1, 2}, {1, 3}, {2, 4}});

  const CircleTree small(4, {{1, 3}, {2, 4}, {1, 2}});
  const EReductionResult er2 = e_reduce(small);
  CHECK(er2.prereduced.edges() == EdgeList{{1, 3}, {2, 4}});
  CHECK(er2.reduced.edges() == EdgeList{{1, 2}, {1, 3}, {2, 4}});

  const CircleTree triple(6, {{1, 4}, {2, 5}, {3, 6}, {1, 2}, {2, 3}});
  const EReductionResult er3 = e_reduce(triple);
  CHECK(er3.prereduced.edges() == EdgeList{{1, 4}, {2, 5}, {3, 6}});
  CHECK(er3.reduced.edges() == triple.edges());
}

TEST_CASE("e_reduce routes a path through a branching free point") {
  // point 6 is free, has degree three, and carries both a pendant edge and
  // the unique connecting path between the two e-graphs
  const CircleTree t(9, {{1, 4}, {2, 9}, {3, 8}, {2, 3}, {4, 5}, {5, 6}, {6, 8}, {6, 7}});
  REQUIRE(is_genus_one(t.graph()));
  const EReductionResult er = e_reduce(t);
  CHECK(er.prereduced.edges() == EdgeList{{1, 4}, {2, 9}});
  CHECK(er.added_edges == EdgeList{{4, 9}});
  CHECK(er.reduced.edges() == EdgeList{{1, 4}, {2, 9}, {4, 9}});
}

TEST_CASE("e_reduce refuses non-genus-one trees") {
  CHECK_THROWS_AS(e_reduce(CircleTree(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}})), DomainError);
  CHECK_THROWS_AS(
      e_reduce(CircleTree(8, {{1, 5}, {2, 6}, {3, 7}, {4, 8}, {1, 2}, {2, 3}, {3, 4}})),
      DomainError);
}

TEST_CASE("e_reduce structural bookkeeping") {
  std::mt19937 rng(47);
  int checked = 0;
  for (int trial = 0; trial < 500 && checked < 120; ++trial) {
    const CircleTree t = random_tree(5 + trial % 8, rng);
    if (!is_genus_one(t.graph())) continue;
    ++checked;
    const EReductionResult er = e_reduce(t);
    // reduced = prereduced plus exactly n_p - n_e - 1 uncrossed additions
    const int n_p = static_cast<int>(canonicalize(er.prereduced).k);
    const int n_e = er.prereduced.edge_count();
    CHECK(static_cast<int>(er.added_edges.size()) == n_p - n_e - 1);
    for (const Edge& e : er.added_edges) {
      const EdgeList loose = uncrossed_edges(er.reduced);
      CHECK(std::count(loose.begin(), loose.end(), e) == 1);
    }
    // same final offspring as the host tree, and it is Form 1 or Form 2
    const auto host = match_final_form(t.graph());
    const auto pre = match_final_form(er.prereduced);
    CHECK(host.canonical == pre.canonical);
    CHECK((pre.kind == FinalFormVerdict::Kind::Form1 ||
           pre.kind == FinalFormVerdict::Kind::Form2));
  }
  CHECK(checked == 120);
}

TEST_CASE("representative choice does not change the canonical reduced form") {
  std::mt19937 rng(53);
  int checked = 0;
  for (int trial = 0; trial < 500 && checked < 80; ++trial) {
    const CircleTree t = random_tree(6 + trial % 7, rng);
    if (!is_genus_one(t.graph())) continue;
    ++checked;
    const CanonicalForm expected = canonicalize(e_reduce(t).reduced);
    for (int run = 0; run < 4; ++run) {
      auto chooser = [&rng](const EGraph& eg) {
        std::uniform_int_distribution<std::size_t> pick(0, eg.parallel.size() - 1);
        return eg.parallel[pick(rng)];
      };
      CHECK(canonicalize(e_reduce(t, chooser).reduced) == expected);
    }
  }
  CHECK(checked == 80);
}
