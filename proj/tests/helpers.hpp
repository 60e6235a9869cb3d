#pragma once

#include <random>
#include <set>
#include <vector>

#include "circletree/circle_graph.hpp"

namespace circletree::testing {

inline CircleTree random_tree(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(1, n);
  std::vector<int> seq(n - 2);
  for (int& x : seq) x = pick(rng);
  return tree_from_prufer(seq);
}

// Stand-alone Pruefer encoder used as the round-trip oracle: repeatedly strip
// the smallest leaf and record its neighbor.
inline std::vector<int> prufer_of(const CircleTree& tree) {
  const int n = tree.points();
  std::vector<std::multiset<int>> adj(n + 1);
  for (const Edge& e : tree.edges()) {
    adj[e.a].insert(e.b);
    adj[e.b].insert(e.a);
  }
  std::vector<int> seq;
  std::set<int> leaves;
  for (int v = 1; v <= n; ++v)
    if (adj[v].size() == 1) leaves.insert(v);
  for (int step = 0; step < n - 2; ++step) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    const int parent = *adj[leaf].begin();
    adj[parent].erase(adj[parent].find(leaf));
    adj[leaf].clear();
    seq.push_back(parent);
    if (adj[parent].size() == 1) leaves.insert(parent);
  }
  return seq;
}

// Every sequence in [1,n]^(n-2), for small exhaustive sweeps.
template <typename Fn>
void for_each_prufer_sequence(int n, Fn&& fn) {
  std::vector<int> seq(n - 2, 1);
  for (;;) {
    fn(seq);
    int pos = n - 3;
    while (pos >= 0 && seq[pos] == n) {
      seq[pos] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++seq[pos];
  }
}

}  // namespace circletree::testing
