#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "circletree/errors.hpp"

namespace circletree {

using BigInt = boost::multiprecision::cpp_int;

// Rooted tree with ordered children split into left and right by a per-node
// delimiter: children with index < delimiter (1-based) hang left, the rest
// right. A single point has no children and delimiter 1.
struct LRTree {
  int delimiter = 1;
  std::vector<LRTree> children;

  int edge_count() const {
    int total = static_cast<int>(children.size());
    for (const LRTree& c : children) total += c.edge_count();
    return total;
  }
  bool has_right_root_edge() const {
    return delimiter <= static_cast<int>(children.size());
  }
  void validate() const {
    if (delimiter < 1 || delimiter > static_cast<int>(children.size()) + 1)
      throw DomainError("l-r-tree delimiter " + std::to_string(delimiter) +
                        " out of range for " + std::to_string(children.size()) + " children");
    for (const LRTree& c : children) c.validate();
  }
  friend bool operator==(const LRTree&, const LRTree&) = default;
};

// Delimiter-reversing involution: children reversed and flipped, delimiter
// d with c children becomes c-d+2.
inline LRTree flip(const LRTree& t) {
  LRTree out;
  const int c = static_cast<int>(t.children.size());
  out.delimiter = c - t.delimiter + 2;
  out.children.reserve(t.children.size());
  for (auto it = t.children.rbegin(); it != t.children.rend(); ++it)
    out.children.push_back(flip(*it));
  return out;
}

inline constexpr int kLrTreeEnumerationCeiling = 8;

namespace detail {

inline const std::vector<std::vector<LRTree>>& lr_tree_lists(int k_max) {
  static std::vector<std::vector<LRTree>> lists = {{LRTree{}}};
  while (static_cast<int>(lists.size()) <= k_max) {
    const int k = static_cast<int>(lists.size());
    std::vector<LRTree> trees;
    std::vector<LRTree> kids;
    // root with m children whose edge counts form a composition of k-m
    const std::function<void(int, int)> place = [&](int child, int edges_left) {
      const int m = static_cast<int>(kids.size());
      if (child == m) {
        if (edges_left != 0) return;
        for (int d = 1; d <= m + 1; ++d) {
          trees.push_back(LRTree{d, kids});
        }
        return;
      }
      const int remaining_children = m - child - 1;
      for (int t = 0; t + remaining_children <= edges_left; ++t)
        for (const LRTree& sub : lists[t]) {
          kids[child] = sub;
          place(child + 1, edges_left - t);
        }
    };
    for (int m = 1; m <= k; ++m) {
      kids.assign(m, LRTree{});
      place(0, k - m);
    }
    lists.push_back(std::move(trees));
  }
  return lists;
}

}  // namespace detail

// Visits every l-r-tree with exactly `edges` edges once.
inline void for_each_lr_tree(int edges, const std::function<void(const LRTree&)>& visit) {
  if (edges < 0) throw DomainError("edge count must be nonnegative");
  if (edges > kLrTreeEnumerationCeiling)
    throw DomainError("l-r-tree enumeration is capped at " +
                      std::to_string(kLrTreeEnumerationCeiling) + " edges, got " +
                      std::to_string(edges));
  for (const LRTree& t : detail::lr_tree_lists(edges)[edges]) visit(t);
}

inline std::vector<LRTree> enumerate_lr_trees(int edges) {
  std::vector<LRTree> out;
  for_each_lr_tree(edges, [&](const LRTree& t) { out.push_back(t); });
  return out;
}

// Exact values of the sequences:
//   a_k  l-r-trees with k edges
//   b_k  those with at least one right edge at the root
//   c_k  those with none (c = a - b)
//   l_s  sum_{i<s} a_i * b_{s-i}
struct SeriesTable {
  std::vector<BigInt> a, b, c, l;
};

// a satisfies A = 1 + sum_{m>=1} (m+1) x^m A^m, i.e. A (1 - xA)^2 = 1; the
// table is filled through the equivalent convolution recurrence
// a_k = 2 [x^{k-1}] A^2 - [x^{k-2}] A^3.
inline SeriesTable series_tables(int k_max) {
  if (k_max < 0) throw DomainError("series_tables: negative index");
  SeriesTable t;
  const int size = k_max + 1;
  t.a.assign(size, 0);
  t.b.assign(size, 0);
  t.c.assign(size, 0);
  t.l.assign(size, 0);
  std::vector<BigInt> a2(size, 0), a3(size, 0);  // coefficients of A^2 and A^3

  t.a[0] = 1;
  a2[0] = 1;
  a3[0] = 1;
  t.c[0] = 1;
  for (int k = 1; k <= k_max; ++k) {
    t.a[k] = 2 * a2[k - 1] - (k >= 2 ? a3[k - 2] : BigInt(0));
    for (int i = 0; i <= k; ++i) a2[k] += t.a[i] * t.a[k - i];
    for (int i = 0; i <= k; ++i) a3[k] += t.a[i] * a2[k - i];
    t.b[k] = a2[k - 1];
    t.c[k] = t.a[k] - t.b[k];
    if (t.c[k] < 0) throw InvariantError("series: c_" + std::to_string(k) + " negative");
    for (int i = 0; i <= k - 1; ++i) t.l[k] += t.a[i] * t.b[k - i];
  }
  return t;
}

inline std::vector<BigInt> l_sequence(int s_max) { return series_tables(s_max).l; }

// Reduction form of the negligent-number test: halve even values, peel
// v -> (v-1)/4 off values congruent 1 mod 4, reject on 3 mod 4.
inline bool negligent(std::uint64_t v) {
  for (;;) {
    if (v <= 1) return true;  // v = 0 and v = 1 are negligent
    switch (v % 4) {
      case 3: return false;
      case 1: v = (v - 1) / 4; break;
      default: v /= 2; break;
    }
  }
}

// Independent route: negligent numbers are exactly 0 together with the
// closure of {1} under k -> 2k and k -> 4k+1, equivalently the sums
// sum_i 4^i 2^{l_i} with nondecreasing exponents l_i.
inline bool negligent_by_closure(std::uint64_t v) {
  if (v == 0 || v == 1) return true;
  std::vector<std::uint64_t> frontier{1};
  std::vector<std::uint64_t> next;
  while (!frontier.empty()) {
    next.clear();
    for (std::uint64_t x : frontier) {
      for (std::uint64_t y : {2 * x, 4 * x + 1}) {
        if (y == v) return true;
        if (y < v) next.push_back(y);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier.swap(next);
  }
  return false;
}

// Every negligent number up to and including `bound`, ascending. Each element
// of the closure has a unique derivation, so plain breadth-first generation
// visits no value twice.
inline std::vector<std::uint64_t> negligent_numbers_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out{0};
  std::vector<std::uint64_t> frontier;
  if (bound >= 1) frontier.push_back(1);
  while (!frontier.empty()) {
    out.insert(out.end(), frontier.begin(), frontier.end());
    std::vector<std::uint64_t> next;
    for (std::uint64_t x : frontier) {
      if (2 * x <= bound) next.push_back(2 * x);
      if (4 * x + 1 <= bound) next.push_back(4 * x + 1);
    }
    frontier.swap(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Parities of a_k, b_k, c_k, l_s straight from the recurrences, without big
// integers. c_v is odd exactly for negligent v.
inline int parity_c(std::uint64_t v) { return negligent(v) ? 1 : 0; }

inline int parity_a(std::uint64_t k) { return (k % 2 == 1) ? 0 : parity_c(k / 2); }

inline int parity_b(std::uint64_t m) {
  if (m % 2 == 0) return 0;
  return parity_a((m - 1) / 2);
}

inline int parity_l(std::uint64_t s) {
  if (s % 2 == 0) return 0;
  if (s % 4 == 1) {
    const std::uint64_t v = (s - 1) / 4;
    if (v % 2 == 1) return 0;
    return parity_c(v / 2);
  }
  // s = 4v+3: the sum S(v) halves while v stays odd, then terminates
  std::uint64_t v = (s - 3) / 4;
  while (v % 2 == 1) v = (v - 1) / 2;
  const std::uint64_t v1 = v / 2;
  if (v1 % 2 == 1) return 0;
  return parity_c(v1 / 2);
}

// Divisibility of the genus-one labeled tree count f(n) by n.
struct FamilyWitness {
  std::string family;       // "32v+10", "64v+18" or "64*2^k*v+16*2^k+2"
  std::uint64_t v = 0;      // the negligent parameter
  int k = 0;                // exponent for the third family, otherwise 0
  bool v_negligent = false;
};

struct DivisibilityVerdict {
  enum class Kind { DivisibleByN, OnlyByHalf };
  Kind verdict = Kind::DivisibleByN;
  std::optional<FamilyWitness> witness;  // present only for OnlyByHalf
};

// Closed-form family matcher: n belongs to one of the three exceptional
// families iff n-2 = 2^j * (4v+1) with j >= 3; the family name is determined
// by j and the parameter is v. Returns nullopt when n has no family shape.
inline std::optional<FamilyWitness> family_witness(std::int64_t n) {
  if (n <= 3 || n % 4 != 2) return std::nullopt;
  std::uint64_t m = static_cast<std::uint64_t>(n - 2);
  int j = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++j;
  }
  if (j < 3 || m % 4 != 1) return std::nullopt;
  FamilyWitness w;
  w.v = (m - 1) / 4;
  w.v_negligent = negligent(w.v);
  if (j == 3) {
    w.family = "32v+10";
  } else if (j == 4) {
    w.family = "64v+18";
  } else {
    w.family = "64*2^k*v+16*2^k+2";
    w.k = j - 4;
  }
  return w;
}

// f(n) is divisible by n except when n lies in one of three families with a
// negligent parameter, in which case it is divisible only by n/2. The verdict
// comes from the parity engine; the witness from the closed-form matcher.
inline DivisibilityVerdict classify_n(std::int64_t n) {
  if (n <= 3) throw DomainError("classify_n requires n > 3, got " + std::to_string(n));
  DivisibilityVerdict out;
  if (n % 2 == 1 || n % 4 == 0) return out;

  const std::uint64_t s = static_cast<std::uint64_t>(n - 2) / 4 - 1;
  auto witness = family_witness(n);
  const bool half = parity_l(s) == 1;
  if (half != (witness && witness->v_negligent))
    throw InvariantError("classify_n: family witness and parity engine disagree at n=" +
                         std::to_string(n));
  if (half) {
    out.verdict = DivisibilityVerdict::Kind::OnlyByHalf;
    out.witness = std::move(witness);
  }
  return out;
}

inline const char* to_string(DivisibilityVerdict::Kind k) {
  return k == DivisibilityVerdict::Kind::DivisibleByN ? "DivisibleByN" : "OnlyByHalf";
}

}  // namespace circletree
