#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "circletree/circle_graph.hpp"
#include "circletree/form_catalog.hpp"
#include "circletree/lr_series.hpp"
#include "circletree/reduction.hpp"
#include "circletree/rotation_system.hpp"
#include "circletree/version.hpp"

namespace circletree {

inline constexpr int kCensusCeiling = 11;

namespace detail {

// Fixed-size labeled tree for the enumeration kernel; n <= kCensusCeiling.
struct SmallTree {
  int n = 0;
  int m = 0;  // chord count, n-1
  std::uint8_t ea[12];
  std::uint8_t eb[12];
};

inline void decode_prufer(int n, const std::uint8_t* seq, SmallTree& t) {
  t.n = n;
  t.m = n - 1;
  std::uint8_t deg[13];
  for (int i = 1; i <= n; ++i) deg[i] = 1;
  for (int i = 0; i < n - 2; ++i) ++deg[seq[i]];
  int ptr = 1;
  while (deg[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int i = 0; i < n - 2; ++i) {
    const int v = seq[i];
    t.ea[i] = static_cast<std::uint8_t>(leaf < v ? leaf : v);
    t.eb[i] = static_cast<std::uint8_t>(leaf < v ? v : leaf);
    if (--deg[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (deg[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  t.ea[n - 2] = static_cast<std::uint8_t>(leaf);
  t.eb[n - 2] = static_cast<std::uint8_t>(n);
}

inline bool edges_cross(int a1, int b1, int a2, int b2) {
  if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) return false;
  return (a1 < a2 && a2 < b1) != (a1 < b2 && b2 < b1);
}

// Marcus reduction over bitmasks. Returns the surviving-edge count of the
// final offspring: 2 means Form 1, 3 means Form 2, anything else is not
// genus one (0 for genus zero).
inline int final_offspring_size(const SmallTree& t) {
  std::uint32_t cross[12];
  for (int i = 0; i < t.m; ++i) cross[i] = 0;
  for (int i = 0; i < t.m; ++i)
    for (int j = i + 1; j < t.m; ++j)
      if (edges_cross(t.ea[i], t.eb[i], t.ea[j], t.eb[j])) {
        cross[i] |= 1u << j;
        cross[j] |= 1u << i;
      }
  std::uint32_t alive = (1u << t.m) - 1;
  // uncrossed edges never reappear once collapses start, so one sweep suffices
  for (int i = 0; i < t.m; ++i)
    if ((cross[i] & alive) == 0) alive &= ~(1u << i);
  for (;;) {
    std::uint32_t removed = 0;
    std::uint32_t pending = alive;
    while (pending) {
      const int i = std::countr_zero(pending);
      pending &= pending - 1;
      const std::uint32_t ci = cross[i] & alive;
      std::uint32_t rest = pending;
      while (rest) {
        const int j = std::countr_zero(rest);
        rest &= rest - 1;
        if ((cross[j] & alive) == ci) {
          removed |= 1u << j;
          pending &= ~(1u << j);
        }
      }
    }
    if (!removed) break;
    alive &= ~removed;
  }
  return std::popcount(alive);
}

inline bool genus_one_fast(const SmallTree& t) {
  const int s = final_offspring_size(t);
  return s == 2 || s == 3;
}

// Face-traced genus of chords + circle, matching genus() in rotation_system.hpp.
inline int genus_fast(const SmallTree& t) {
  const int n = t.n, m = t.m;
  const int darts = 2 * (m + n);
  int rho[44];
  int order[13];
  std::pair<int, int> chord[12];  // (ccw distance, dart)
  for (int i = 1; i <= n; ++i) {
    int cnt = 0;
    for (int e = 0; e < m; ++e) {
      if (t.ea[e] == i)
        chord[cnt++] = {(t.eb[e] - i + n) % n, 2 * e};
      else if (t.eb[e] == i)
        chord[cnt++] = {(t.ea[e] - i + n) % n, 2 * e + 1};
    }
    for (int x = 1; x < cnt; ++x) {  // insertion sort by angular distance
      const auto key = chord[x];
      int y = x;
      while (y > 0 && chord[y - 1].first > key.first) {
        chord[y] = chord[y - 1];
        --y;
      }
      chord[y] = key;
    }
    int len = 0;
    order[len++] = 2 * (m + (i - 1));
    for (int x = 0; x < cnt; ++x) order[len++] = chord[x].second;
    order[len++] = 2 * (m + (i - 2 + n) % n) + 1;
    for (int x = 0; x < len; ++x) rho[order[x]] = order[(x + 1) % len];
  }
  std::uint64_t seen = 0;
  int faces = 0;
  for (int d0 = 0; d0 < darts; ++d0) {
    if (seen >> d0 & 1) continue;
    ++faces;
    int d = d0;
    do {
      seen |= 1ull << d;
      d = rho[d ^ 1];
    } while (d != d0);
  }
  return (2 + m - faces) / 2;
}

// Lexicographically compares the tree against each of its rotations.
// Returns true when the tree is the minimal labeling of its rotation class,
// and stores the least positive shift fixing the edge set.
inline bool rotation_representative(const SmallTree& t, int& period) {
  const int n = t.n, m = t.m;
  std::uint16_t base[12], rot[12];
  for (int e = 0; e < m; ++e) base[e] = static_cast<std::uint16_t>(t.ea[e] << 4 | t.eb[e]);
  for (int x = 1; x < m; ++x) {
    const std::uint16_t key = base[x];
    int y = x;
    while (y > 0 && base[y - 1] > key) {
      base[y] = base[y - 1];
      --y;
    }
    base[y] = key;
  }
  period = n;
  for (int s = 1; s < n; ++s) {
    for (int e = 0; e < m; ++e) {
      int a = t.ea[e] + s;
      if (a > n) a -= n;
      int b = t.eb[e] + s;
      if (b > n) b -= n;
      rot[e] = static_cast<std::uint16_t>(a < b ? (a << 4 | b) : (b << 4 | a));
    }
    for (int x = 1; x < m; ++x) {
      const std::uint16_t key = rot[x];
      int y = x;
      while (y > 0 && rot[y - 1] > key) {
        rot[y] = rot[y - 1];
        --y;
      }
      rot[y] = key;
    }
    int cmp = 0;
    for (int e = 0; e < m; ++e) {
      if (rot[e] != base[e]) {
        cmp = rot[e] < base[e] ? -1 : 1;
        break;
      }
    }
    if (cmp < 0) return false;
    if (cmp == 0 && period == n) period = s;
  }
  return true;
}

inline CircleTree to_circle_tree(const SmallTree& t) {
  EdgeList edges;
  edges.reserve(t.m);
  for (int e = 0; e < t.m; ++e) edges.emplace_back(t.ea[e], t.eb[e]);
  return CircleTree(t.n, std::move(edges));
}

}  // namespace detail

struct CensusOptions {
  int jobs = 0;          // 0 = hardware concurrency
  bool classify = true;  // fill per-form and orbit data (needed for p_n)
};

struct CensusReport {
  int n = 0;
  std::uint64_t f_n = 0;
  std::uint64_t f_mod_n = 0;
  std::map<int, std::uint64_t> orbit_periods;    // min period -> class count
  std::map<std::string, std::uint64_t> by_form;  // form id -> labeled tree count
  std::int64_t p_n = -1;                         // |P_n|, only when n = 2 (mod 4)
  std::uint64_t class_count = 0;
  std::uint64_t labeled_from_orbits = 0;         // sum of l(C) over classes
};

namespace detail {

struct ShardAccumulator {
  std::uint64_t f_n = 0;
  std::uint64_t p_n = 0;
  std::uint64_t class_count = 0;
  std::uint64_t labeled_from_orbits = 0;
  std::map<int, std::uint64_t> orbit_periods;
  std::map<std::string, std::uint64_t> by_form;
};

// Walks every Pruefer sequence whose leading digits give shard `shard` of
// `shard_count`; sequences are base-n odometers of length n-2.
template <typename Fn>
void for_each_tree_in_shard(int n, std::uint64_t shard, std::uint64_t shard_count, Fn&& fn) {
  const int len = n - 2;
  std::uint8_t seq[12];
  int fixed = 0;
  {
    std::uint64_t s = shard, span = shard_count;
    while (span > 1) {
      span /= n;
      seq[fixed++] = static_cast<std::uint8_t>(s / span + 1);
      s %= span;
    }
  }
  for (int i = fixed; i < len; ++i) seq[i] = 1;
  SmallTree tree;
  for (;;) {
    decode_prufer(n, seq, tree);
    fn(tree);
    int pos = len - 1;
    while (pos >= fixed && seq[pos] == n) {
      seq[pos] = 1;
      --pos;
    }
    if (pos < fixed) break;
    ++seq[pos];
  }
}

inline void census_shard(int n, std::uint64_t shard, std::uint64_t shard_count, bool classify,
                         ShardAccumulator& acc) {
  for_each_tree_in_shard(n, shard, shard_count, [&](const SmallTree& t) {
    if (!genus_one_fast(t)) return;
    ++acc.f_n;
    if (!classify) return;
    int period = 0;
    if (!rotation_representative(t, period)) return;
    ++acc.class_count;
    acc.labeled_from_orbits += static_cast<std::uint64_t>(period);
    ++acc.orbit_periods[period];
    const std::string form = classify_tree(to_circle_tree(t));
    acc.by_form[form] += static_cast<std::uint64_t>(period);
    if (form == "T3^6[5]" && 2 * period == n) ++acc.p_n;
  });
}

}  // namespace detail

// Exhaustive census of the n^(n-2) labeled trees on n points: counts the
// genus-one ones and, unless disabled, classifies one representative per
// rotation class. Work is sharded over the leading Pruefer digits; shards
// share nothing, so totals are independent of the worker count.
inline CensusReport count_f(int n, CensusOptions options = {}) {
  if (n < 3 || n > kCensusCeiling)
    throw DomainError("census supports 3 <= n <= " + std::to_string(kCensusCeiling) +
                      ", got " + std::to_string(n));
  if (options.classify) catalog();  // materialize before the workers start

  const int len = n - 2;
  std::uint64_t shard_count = 1;
  for (int i = 0; i < std::min(len, 2); ++i) shard_count *= static_cast<std::uint64_t>(n);
  int jobs = options.jobs > 0 ? options.jobs
                              : static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  if (static_cast<std::uint64_t>(jobs) > shard_count) jobs = static_cast<int>(shard_count);

  std::vector<detail::ShardAccumulator> acc(jobs);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      for (std::uint64_t shard = w; shard < shard_count; shard += jobs)
        detail::census_shard(n, shard, shard_count, options.classify, acc[w]);
    });
  }
  for (auto& t : workers) t.join();

  CensusReport report;
  report.n = n;
  for (const auto& a : acc) {
    report.f_n += a.f_n;
    report.class_count += a.class_count;
    report.labeled_from_orbits += a.labeled_from_orbits;
    for (const auto& [k, v] : a.orbit_periods) report.orbit_periods[k] += v;
    for (const auto& [k, v] : a.by_form) report.by_form[k] += v;
    if (n % 4 == 2) report.p_n = std::max<std::int64_t>(report.p_n, 0) + a.p_n;
  }
  report.f_mod_n = report.f_n % static_cast<std::uint64_t>(n);
  if (!options.classify) report.p_n = -1;
  return report;
}

// Number of non-isomorphic labelings of the class of C: its minimal period.
inline int l_count(const CircleGraph& c) {
  if (!is_genus_one(c)) throw DomainError("l_count requires a genus-one graph");
  return min_period(c);
}

// |P_n|: genus-one classes on n points reducing to the self-mirror
// half-period form with period n/2.
inline std::uint64_t count_P_n(int n, CensusOptions options = {}) {
  if (n % 4 != 2) throw DomainError("count_P_n requires n = 2 (mod 4), got " + std::to_string(n));
  options.classify = true;
  const CensusReport r = count_f(n, options);
  return static_cast<std::uint64_t>(r.p_n);
}

}  // namespace circletree
