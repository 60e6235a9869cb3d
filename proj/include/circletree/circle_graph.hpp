#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "circletree/errors.hpp"

namespace circletree {

// Chord between two distinct circle points, stored endpoint-sorted (a < b).
struct Edge {
  int a = 0;
  int b = 0;

  Edge() = default;
  Edge(int x, int y) : a(x < y ? x : y), b(x < y ? y : x) {
    if (x == y) throw DomainError("edge endpoints must differ: " + std::to_string(x));
  }

  bool touches(int p) const { return a == p || b == p; }
  bool shares_endpoint(const Edge& o) const {
    return touches(o.a) || touches(o.b);
  }
  // The endpoint that is not `p`; `p` must be an endpoint.
  int other(int p) const {
    if (a == p) return b;
    if (b == p) return a;
    throw DomainError("point is not an endpoint of the edge");
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

// n labeled points on a circle, 1..n counterclockwise, plus a set of chords
// drawn as straight lines. Immutable after construction.
class CircleGraph {
 public:
  CircleGraph(int n, EdgeList edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 3) throw DomainError("point count must be at least 3, got " + std::to_string(n_));
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      if (e.a < 1 || e.b > n_)
        throw DomainError("edge " + std::to_string(e.a) + "-" + std::to_string(e.b) +
                          " out of range for n=" + std::to_string(n_));
      if (i > 0 && edges_[i - 1] == e)
        throw DomainError("duplicate edge " + std::to_string(e.a) + "-" + std::to_string(e.b));
    }
  }

  int points() const { return n_; }
  const EdgeList& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool contains(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }
  // Index of `e` in the sorted edge list, or -1.
  int index_of(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
  }
  CircleGraph without(const EdgeList& removed) const {
    EdgeList keep;
    keep.reserve(edges_.size());
    for (const Edge& e : edges_)
      if (!std::count(removed.begin(), removed.end(), e)) keep.push_back(e);
    return CircleGraph(n_, std::move(keep));
  }
  CircleGraph with(const EdgeList& added) const {
    EdgeList all = edges_;
    all.insert(all.end(), added.begin(), added.end());
    return CircleGraph(n_, std::move(all));
  }

  friend bool operator==(const CircleGraph&, const CircleGraph&) = default;

 private:
  int n_;
  EdgeList edges_;
};

// True iff the straight chords e1, e2 intersect at an interior point.
// Combinatorially: exactly one endpoint of e2 lies strictly inside the open
// arc (e1.a, e1.b); chords sharing an endpoint never cross.
inline bool crosses(int n, const Edge& e1, const Edge& e2) {
  if (e1.a < 1 || e1.b > n || e2.a < 1 || e2.b > n)
    throw DomainError("crosses: edge endpoint out of range for n=" + std::to_string(n));
  if (e1 == e2) throw DomainError("crosses: the two edges must differ");
  if (e1.shares_endpoint(e2)) return false;
  const bool a_in = e1.a < e2.a && e2.a < e1.b;
  const bool b_in = e1.a < e2.b && e2.b < e1.b;
  return a_in != b_in;
}

namespace detail {

// cross_sets[i] = sorted indices of edges crossing edges()[i].
inline std::vector<std::vector<int>> cross_index_sets(const CircleGraph& g) {
  const EdgeList& es = g.edges();
  const int m = g.edge_count();
  std::vector<std::vector<int>> out(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (crosses(g.points(), es[i], es[j])) {
        out[i].push_back(j);
        out[j].push_back(i);
      }
  for (auto& v : out) std::sort(v.begin(), v.end());
  return out;
}

// Orders a set of pairwise-parallel edges along their "ladder": every edge has
// one endpoint on each side of any common crossing edge, and sorting by the
// position of the side-A endpoint is the nested outermost-to-innermost order.
// The lexicographically smaller end of the ladder comes first.
inline void ladder_sort(EdgeList& bundle, const Edge& crossing_edge) {
  const int lo = crossing_edge.a, hi = crossing_edge.b;
  std::sort(bundle.begin(), bundle.end(), [&](const Edge& x, const Edge& y) {
    const int px = (lo < x.a && x.a < hi) ? x.a : x.b;
    const int py = (lo < y.a && y.a < hi) ? y.a : y.b;
    return px < py;
  });
  if (bundle.size() > 1 && bundle.back() < bundle.front())
    std::reverse(bundle.begin(), bundle.end());
}

}  // namespace detail

// All edges of G crossing e.
inline EdgeList cross_set(const CircleGraph& g, const Edge& e) {
  if (!g.contains(e)) throw DomainError("cross_set: edge not in graph");
  EdgeList out;
  for (const Edge& f : g.edges())
    if (f != e && crosses(g.points(), e, f)) out.push_back(f);
  return out;
}

// Partition of the crossed edges of G into parallel classes (edges sharing a
// class iff their cross sets coincide). Each class is in increasingly-parallel
// order, outermost first; classes are sorted by their leading edge.
inline std::vector<EdgeList> parallel_classes(const CircleGraph& g) {
  const EdgeList& es = g.edges();
  const auto cs = detail::cross_index_sets(g);
  const int m = g.edge_count();
  std::vector<bool> grouped(m, false);
  std::vector<EdgeList> classes;
  for (int i = 0; i < m; ++i) {
    if (grouped[i] || cs[i].empty()) continue;
    EdgeList cls{es[i]};
    grouped[i] = true;
    for (int j = i + 1; j < m; ++j)
      if (!grouped[j] && cs[j] == cs[i]) {
        cls.push_back(es[j]);
        grouped[j] = true;
      }
    detail::ladder_sort(cls, es[cs[i].front()]);
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const EdgeList& x, const EdgeList& y) { return x.front() < y.front(); });
  return classes;
}

// Rotates every point one step counterclockwise: i -> i+1, n -> 1.
inline CircleGraph rotate(const CircleGraph& g) {
  const int n = g.points();
  EdgeList out;
  out.reserve(g.edges().size());
  for (const Edge& e : g.edges()) out.emplace_back(e.a % n + 1, e.b % n + 1);
  return CircleGraph(n, std::move(out));
}

// Mirror image: relabels i -> n+2-i (fixing point 1). An involution.
inline CircleGraph reflect(const CircleGraph& g) {
  const int n = g.points();
  auto sigma = [n](int i) { return i == 1 ? 1 : n + 2 - i; };
  EdgeList out;
  out.reserve(g.edges().size());
  for (const Edge& e : g.edges()) out.emplace_back(sigma(e.a), sigma(e.b));
  return CircleGraph(n, std::move(out));
}

// Smallest m >= 1 with rotate^m(G) = G; always divides n.
inline int min_period(const CircleGraph& g) {
  if (g.edges().empty()) throw DomainError("min_period: graph has no edges");
  CircleGraph cur = rotate(g);
  for (int m = 1; m <= g.points(); ++m) {
    if (cur == g) return m;
    cur = rotate(cur);
  }
  throw InvariantError("min_period: rotate^n did not return the graph");
}

// A circle graph with isolated points dropped, renumbered 1..k preserving
// cyclic order, and taken to the lexicographically minimal rotation. Two
// graphs describe the same unlabeled circle graph iff their canonical forms
// are equal (rotation only; mirror images stay distinct).
struct CanonicalForm {
  int k = 0;
  EdgeList edges;
  int period = 0;

  friend bool operator==(const CanonicalForm& x, const CanonicalForm& y) {
    return x.k == y.k && x.edges == y.edges;
  }
  friend std::strong_ordering operator<=>(const CanonicalForm& x, const CanonicalForm& y) {
    if (auto c = x.k <=> y.k; c != 0) return c;
    return x.edges <=> y.edges;
  }
};

inline CanonicalForm canonicalize(const CircleGraph& g) {
  if (g.edges().empty()) return CanonicalForm{};
  std::vector<int> used;
  for (const Edge& e : g.edges()) {
    used.push_back(e.a);
    used.push_back(e.b);
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  const int k = static_cast<int>(used.size());
  std::vector<int> rank(g.points() + 1, 0);
  for (int i = 0; i < k; ++i) rank[used[i]] = i + 1;

  EdgeList base;
  base.reserve(g.edges().size());
  for (const Edge& e : g.edges()) base.emplace_back(rank[e.a], rank[e.b]);
  std::sort(base.begin(), base.end());

  EdgeList best = base;
  EdgeList cur = base;
  int period = k;
  for (int s = 1; s < k; ++s) {
    EdgeList next;
    next.reserve(cur.size());
    for (const Edge& e : cur) next.emplace_back(e.a % k + 1, e.b % k + 1);
    std::sort(next.begin(), next.end());
    cur = std::move(next);
    if (period == k && cur == base) period = s;
    if (cur < best) best = cur;
  }
  return CanonicalForm{k, std::move(best), period};
}

inline CircleGraph to_circle_graph(const CanonicalForm& f) {
  if (f.k < 3) throw DomainError("canonical form has fewer than 3 points");
  return CircleGraph(f.k, f.edges);
}

// A connected circle graph with exactly n-1 edges.
class CircleTree {
 public:
  explicit CircleTree(CircleGraph g) : g_(std::move(g)) {
    const int n = g_.points();
    if (g_.edge_count() != n - 1)
      throw DomainError("not a tree: expected " + std::to_string(n - 1) + " edges, got " +
                        std::to_string(g_.edge_count()));
    std::vector<int> parent(n + 1);
    for (int i = 1; i <= n; ++i) parent[i] = i;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int components = n;
    for (const Edge& e : g_.edges()) {
      int ra = find(e.a), rb = find(e.b);
      if (ra == rb) throw DomainError("not a tree: cycle through edge " + std::to_string(e.a) +
                                      "-" + std::to_string(e.b));
      parent[ra] = rb;
      --components;
    }
    if (components != 1) throw InvariantError("tree check: acyclic with n-1 edges but not connected");
  }

  CircleTree(int n, EdgeList edges) : CircleTree(CircleGraph(n, std::move(edges))) {}

  const CircleGraph& graph() const { return g_; }
  operator const CircleGraph&() const { return g_; }
  int points() const { return g_.points(); }
  const EdgeList& edges() const { return g_.edges(); }

 private:
  CircleGraph g_;
};

// The unique labeled tree with the given Pruefer sequence (n = length + 2).
inline CircleTree tree_from_prufer(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  if (n < 3) throw DomainError("Pruefer sequence must have at least one entry");
  for (int x : seq)
    if (x < 1 || x > n)
      throw DomainError("Pruefer entry " + std::to_string(x) + " out of range [1," +
                        std::to_string(n) + "]");
  std::vector<int> deg(n + 1, 1);
  for (int x : seq) ++deg[x];
  EdgeList edges;
  edges.reserve(n - 1);
  int ptr = 1;
  while (deg[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int x : seq) {
    edges.emplace_back(leaf, x);
    if (--deg[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (deg[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n);
  return CircleTree(n, std::move(edges));
}

}  // namespace circletree
