#pragma once

#include <algorithm>
#include <vector>

#include "circletree/circle_graph.hpp"
#include "circletree/errors.hpp"

namespace circletree {

// Combinatorial map of the drawing "chords + circle". Edges are indexed with
// the chords first, then the n circle arcs (arc k joins k+1 and its successor).
// Edge e owns darts 2e and 2e+1; iota is the pairing d <-> d^1.
struct RotationSystem {
  int n = 0;
  int chords = 0;
  std::vector<int> dart_vertex;  // dart -> vertex it leaves
  std::vector<int> dart_target;  // dart -> vertex it points at
  std::vector<int> rho;          // dart -> next dart counterclockwise at the same vertex

  int dart_count() const { return static_cast<int>(rho.size()); }
  static int iota(int d) { return d ^ 1; }
};

// Counterclockwise dart order at vertex i, fixed by the straight-chord
// drawing: arc toward i+1, then chords by increasing counterclockwise angular
// distance to the far endpoint, then arc toward i-1.
inline RotationSystem build_rotation_system(const CircleGraph& g) {
  const int n = g.points();
  const int m = g.edge_count();
  RotationSystem rs;
  rs.n = n;
  rs.chords = m;
  const int darts = 2 * (m + n);
  rs.dart_vertex.assign(darts, 0);
  rs.dart_target.assign(darts, 0);
  rs.rho.assign(darts, 0);

  // Chord e = (a,b): dart 2e at a, 2e+1 at b. Arc k = (k+1, succ): dart
  // 2(m+k) at k+1 pointing forward, 2(m+k)+1 at the successor pointing back.
  for (int e = 0; e < m; ++e) {
    rs.dart_vertex[2 * e] = g.edges()[e].a;
    rs.dart_target[2 * e] = g.edges()[e].b;
    rs.dart_vertex[2 * e + 1] = g.edges()[e].b;
    rs.dart_target[2 * e + 1] = g.edges()[e].a;
  }
  for (int k = 0; k < n; ++k) {
    const int u = k + 1;
    const int v = u % n + 1;
    rs.dart_vertex[2 * (m + k)] = u;
    rs.dart_target[2 * (m + k)] = v;
    rs.dart_vertex[2 * (m + k) + 1] = v;
    rs.dart_target[2 * (m + k) + 1] = u;
  }

  std::vector<std::vector<std::pair<int, int>>> chord_darts(n + 1);  // (ccw distance, dart)
  for (int e = 0; e < m; ++e) {
    const Edge& ed = g.edges()[e];
    chord_darts[ed.a].emplace_back((ed.b - ed.a + n) % n, 2 * e);
    chord_darts[ed.b].emplace_back((ed.a - ed.b + n) % n, 2 * e + 1);
  }

  std::vector<int> order;
  for (int i = 1; i <= n; ++i) {
    order.clear();
    order.push_back(2 * (m + (i - 1)));  // arc toward successor
    std::sort(chord_darts[i].begin(), chord_darts[i].end());
    for (const auto& [dist, d] : chord_darts[i]) order.push_back(d);
    order.push_back(2 * (m + (i - 2 + n) % n) + 1);  // arc toward predecessor
    for (std::size_t j = 0; j < order.size(); ++j)
      rs.rho[order[j]] = order[(j + 1) % order.size()];
  }
  return rs;
}

// Number of cycles of the face permutation rho o iota.
inline int face_count(const RotationSystem& rs) {
  std::vector<bool> seen(rs.dart_count(), false);
  int faces = 0;
  for (int d0 = 0; d0 < rs.dart_count(); ++d0) {
    if (seen[d0]) continue;
    ++faces;
    int d = d0;
    do {
      seen[d] = true;
      d = rs.rho[RotationSystem::iota(d)];
    } while (d != d0);
  }
  return faces;
}

// Genus of the surface on which "chords + circle" embeds with the drawing's
// rotation system: g = (2 - V + E - F) / 2 with V = n and E = chords + n.
inline int genus(const CircleGraph& g) {
  const RotationSystem rs = build_rotation_system(g);
  const int f = face_count(rs);
  const int euler2 = 2 - rs.n + (rs.chords + rs.n) - f;
  if (euler2 < 0 || euler2 % 2 != 0)
    throw InvariantError("Euler characteristic 2-V+E-F = " + std::to_string(euler2) +
                         " is not an even nonnegative number; rotation system is inconsistent");
  return euler2 / 2;
}

}  // namespace circletree
