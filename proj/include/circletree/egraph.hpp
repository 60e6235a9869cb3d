#pragma once

#include <array>
#include <functional>
#include <queue>
#include <utility>
#include <vector>

#include "circletree/circle_graph.hpp"
#include "circletree/reduction.hpp"

namespace circletree {

// Closed counterclockwise interval of circle points, from `from` to `to`
// inclusive; may wrap past n. A single point when from == to.
struct Arc {
  int from = 0;
  int to = 0;

  bool contains(int p) const {
    if (from <= to) return from <= p && p <= to;
    return p >= from || p <= to;
  }
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// A parallel bundle plus the uncrossed edges supported on its two arcs.
// Behaves like a single edge under e-reduction.
struct EGraph {
  EdgeList parallel;            // increasingly parallel, outermost ends first/last
  EdgeList uncrossed;           // both endpoints on the arcs
  std::array<Arc, 2> arcs;      // sorted by starting point
  std::pair<Edge, Edge> outermost;  // equal for a singleton bundle

  EdgeList all_edges() const {
    EdgeList out = parallel;
    out.insert(out.end(), uncrossed.begin(), uncrossed.end());
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<int> points() const {
    std::vector<int> pts;
    for (const Edge& e : parallel) {
      pts.push_back(e.a);
      pts.push_back(e.b);
    }
    for (const Edge& e : uncrossed) {
      pts.push_back(e.a);
      pts.push_back(e.b);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
  }
  bool has_point(int p) const {
    for (const Edge& e : parallel)
      if (e.touches(p)) return true;
    for (const Edge& e : uncrossed)
      if (e.touches(p)) return true;
    return false;
  }
  // The arc holding point p; p must lie on one of the two arcs.
  const Arc& arc_of(int p) const {
    if (arcs[0].contains(p)) return arcs[0];
    if (arcs[1].contains(p)) return arcs[1];
    throw InvariantError("point " + std::to_string(p) + " lies on neither arc of the e-graph");
  }
  friend bool operator==(const EGraph&, const EGraph&) = default;
};

// The e-graph of G containing the crossed edge e: the members of e's parallel
// class reachable from e through edges that are uncrossed or parallel to e,
// together with every uncrossed edge supported on the two minimal arcs
// spanned by the reachable bundle.
inline EGraph egraph_of(const CircleGraph& g, const Edge& e) {
  const int n = g.points();
  const EdgeList& es = g.edges();
  const int m = g.edge_count();
  const int ei = g.index_of(e);
  if (ei < 0) throw DomainError("egraph_of: edge not in graph");
  const auto cs = detail::cross_index_sets(g);
  if (cs[ei].empty()) throw DomainError("egraph_of: edge is uncrossed");

  std::vector<bool> allowed(m, false), in_class(m, false);
  for (int i = 0; i < m; ++i) {
    if (cs[i].empty()) allowed[i] = true;
    if (!cs[i].empty() && cs[i] == cs[ei]) allowed[i] = in_class[i] = true;
  }

  // breadth-first over edges sharing endpoints, restricted to allowed edges
  std::vector<bool> reached(m, false);
  std::queue<int> work;
  reached[ei] = true;
  work.push(ei);
  while (!work.empty()) {
    const int i = work.front();
    work.pop();
    for (int j = 0; j < m; ++j)
      if (allowed[j] && !reached[j] && es[i].shares_endpoint(es[j])) {
        reached[j] = true;
        work.push(j);
      }
  }

  EdgeList bundle;
  for (int i = 0; i < m; ++i)
    if (in_class[i] && reached[i]) bundle.push_back(es[i]);
  const Edge& witness = es[cs[ei].front()];  // crosses every bundle member
  detail::ladder_sort(bundle, witness);

  // One endpoint of each bundle edge lies strictly inside (witness.a,
  // witness.b), the other on the complementary side; each side's arc is the
  // minimal interval covering its endpoints.
  std::vector<int> side_a, side_b;
  for (const Edge& b : bundle) {
    const bool a_inside = witness.a < b.a && b.a < witness.b;
    side_a.push_back(a_inside ? b.a : b.b);
    side_b.push_back(a_inside ? b.b : b.a);
  }
  Arc arc_a{*std::min_element(side_a.begin(), side_a.end()),
            *std::max_element(side_a.begin(), side_a.end())};
  int lo_t = n, hi_t = 0;
  for (int p : side_b) {
    const int t = (p - witness.b + n) % n;
    lo_t = std::min(lo_t, t);
    hi_t = std::max(hi_t, t);
  }
  Arc arc_b{(witness.b - 1 + lo_t) % n + 1, (witness.b - 1 + hi_t) % n + 1};

  EGraph out;
  out.parallel = std::move(bundle);
  out.arcs = {arc_a, arc_b};
  if (out.arcs[1].from < out.arcs[0].from) std::swap(out.arcs[0], out.arcs[1]);
  for (int i = 0; i < m; ++i)
    if (cs[i].empty() && (arc_a.contains(es[i].a) || arc_b.contains(es[i].a)) &&
        (arc_a.contains(es[i].b) || arc_b.contains(es[i].b)))
      out.uncrossed.push_back(es[i]);
  out.outermost = {out.parallel.front(), out.parallel.back()};
  return out;
}

// One e-graph per class of crossed edges under the containing-e-graph
// relation, in order of each e-graph's least bundle edge.
inline std::vector<EGraph> egraph_decomposition(const CircleGraph& g) {
  const auto cs = detail::cross_index_sets(g);
  std::vector<EGraph> out;
  std::vector<bool> covered(g.edge_count(), false);
  for (int i = 0; i < g.edge_count(); ++i) {
    if (covered[i] || cs[i].empty()) continue;
    EGraph eg = egraph_of(g, g.edges()[i]);
    for (const Edge& b : eg.parallel) covered[g.index_of(b)] = true;
    out.push_back(std::move(eg));
  }
  return out;
}

// A path of non-e-graph uncrossed edges whose first and last points lie on
// two different e-graphs and whose interior points lie on none.
struct ConnectingPath {
  std::vector<int> points;  // first point on `from_egraph`, last on `to_egraph`
  EdgeList edges;
  int from_egraph = -1;
  int to_egraph = -1;
};

inline std::vector<ConnectingPath> connecting_paths(const CircleTree& tree,
                                                    const std::vector<EGraph>& egraphs) {
  const int n = tree.points();
  std::vector<int> owner(n + 1, -1);
  for (std::size_t k = 0; k < egraphs.size(); ++k)
    for (int p : egraphs[k].points()) {
      if (owner[p] != -1)
        throw InvariantError("e-graphs share point " + std::to_string(p) +
                             "; decomposition is not vertex-disjoint");
      owner[p] = static_cast<int>(k);
    }

  std::vector<bool> in_egraph(tree.graph().edge_count(), false);
  for (const EGraph& eg : egraphs)
    for (const Edge& e : eg.all_edges()) in_egraph[tree.graph().index_of(e)] = true;

  std::vector<std::vector<std::pair<int, int>>> adj(n + 1);  // (neighbor, edge index)
  for (int i = 0; i < tree.graph().edge_count(); ++i) {
    if (in_egraph[i]) continue;
    const Edge& e = tree.edges()[i];
    adj[e.a].emplace_back(e.b, i);
    adj[e.b].emplace_back(e.a, i);
  }

  // Free edges form a forest. From each e-graph point, search through free
  // points only; every other e-graph point so reached is the far end of a
  // unique path whose interior avoids all e-graphs.
  std::vector<ConnectingPath> out;
  std::vector<int> prev_point(n + 1), prev_edge(n + 1);
  std::vector<bool> seen(n + 1);
  for (int start = 1; start <= n; ++start) {
    if (owner[start] < 0) continue;
    std::fill(seen.begin(), seen.end(), false);
    seen[start] = true;
    std::queue<int> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      const int at = frontier.front();
      frontier.pop();
      for (const auto& [nb, idx] : adj[at]) {
        if (seen[nb]) continue;
        seen[nb] = true;
        prev_point[nb] = at;
        prev_edge[nb] = idx;
        if (owner[nb] < 0) {
          frontier.push(nb);  // interior points must be free; do not expand terminals
        } else if (nb > start && owner[nb] != owner[start]) {
          ConnectingPath cp;
          cp.from_egraph = owner[start];
          cp.to_egraph = owner[nb];
          for (int p = nb; p != start; p = prev_point[p]) {
            cp.points.push_back(p);
            cp.edges.push_back(tree.edges()[prev_edge[p]]);
          }
          cp.points.push_back(start);
          std::reverse(cp.points.begin(), cp.points.end());
          std::reverse(cp.edges.begin(), cp.edges.end());
          out.push_back(std::move(cp));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const ConnectingPath& x, const ConnectingPath& y) {
    return std::pair(x.points.front(), x.points.back()) <
           std::pair(y.points.front(), y.points.back());
  });
  return out;
}

struct EReductionResult {
  CircleGraph prereduced;   // after steps one and two
  CircleGraph reduced;      // after step three
  std::vector<EGraph> egraphs;
  EdgeList representatives;  // kept bundle edge, parallel to `egraphs`
  EdgeList added_edges;      // created in step three; all uncrossed in `reduced`
};

using RepresentativeChooser = std::function<Edge(const EGraph&)>;

// Three-step e-reduction of a genus-one circle tree: keep one representative
// per bundle, delete every uncrossed edge, then re-join e-graphs that were
// connected by a path of uncrossed edges.
inline EReductionResult e_reduce(const CircleTree& tree, const RepresentativeChooser& choose = {}) {
  if (!is_genus_one(tree.graph()))
    throw DomainError("e_reduce: input tree is not genus one");

  std::vector<EGraph> egraphs = egraph_decomposition(tree.graph());
  EdgeList reps;
  EdgeList doomed;
  for (const EGraph& eg : egraphs) {
    Edge rep = choose ? choose(eg) : eg.parallel.front();
    if (std::find(eg.parallel.begin(), eg.parallel.end(), rep) == eg.parallel.end())
      throw DomainError("e_reduce: chosen representative is not in the bundle");
    reps.push_back(rep);
    for (const Edge& b : eg.parallel)
      if (b != rep) doomed.push_back(b);
  }
  const CircleGraph t1 = tree.graph().without(doomed);
  const CircleGraph t2 = t1.without(uncrossed_edges(t1));

  EdgeList sorted_reps = reps;
  std::sort(sorted_reps.begin(), sorted_reps.end());
  if (t2.edges() != sorted_reps)
    throw InvariantError("e_reduce: pre-reduced form is not the set of bundle representatives");

  EdgeList added;
  for (const ConnectingPath& cp : connecting_paths(tree, egraphs)) {
    const EGraph& src = egraphs[cp.from_egraph];
    const EGraph& dst = egraphs[cp.to_egraph];
    const Arc& src_arc = src.arc_of(cp.points.front());
    const Arc& dst_arc = dst.arc_of(cp.points.back());
    const Edge& src_rep = reps[cp.from_egraph];
    const Edge& dst_rep = reps[cp.to_egraph];
    const int a = src_arc.contains(src_rep.a) ? src_rep.a : src_rep.b;
    const int b = dst_arc.contains(dst_rep.a) ? dst_rep.a : dst_rep.b;
    if (!src_arc.contains(a) || !dst_arc.contains(b))
      throw InvariantError("e_reduce: representative has no endpoint on the path's arc");
    added.emplace_back(a, b);
  }
  std::sort(added.begin(), added.end());

  CircleGraph t3 = t2.with(added);

  // Lemma-level sanity: T3 is a tree on the points of T2 and removing its
  // uncrossed edges recovers T2.
  const int n_p = 2 * static_cast<int>(reps.size());
  if (t3.edge_count() != n_p - 1)
    throw InvariantError("e_reduce: reduced form has " + std::to_string(t3.edge_count()) +
                         " edges on " + std::to_string(n_p) + " points");
  {
    std::vector<int> parent(tree.points() + 1);
    for (int i = 1; i <= tree.points(); ++i) parent[i] = i;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Edge& e : t3.edges()) {
      const int ra = find(e.a), rb = find(e.b);
      if (ra == rb) throw InvariantError("e_reduce: reduced form contains a cycle");
      parent[ra] = rb;
    }
  }
  if (t3.without(uncrossed_edges(t3)).edges() != t2.edges())
    throw InvariantError("e_reduce: reduced form minus its uncrossed edges is not the pre-reduced form");

  return EReductionResult{t2, std::move(t3), std::move(egraphs), std::move(reps),
                          std::move(added)};
}

}  // namespace circletree
