#include <catch2/catch_amalgamated.hpp>

#include "circletree/lr_series.hpp"

using namespace circletree;

namespace {
BigInt binomial(int n, int k) {
  BigInt out = 1;
  for (int i = 0; i < k; ++i) {
    out *= n - i;
    out /= i + 1;
  }
  return out;
}
}  // namespace

TEST_CASE("series tables: first exact values") {
  const SeriesTable t = series_tables(6);
  CHECK(t.a == std::vector<BigInt>{1, 2, 7, 30, 143, 728, 3876});
  CHECK(t.b[0] == 0);
  CHECK(t.b[1] == 1);
  CHECK(t.b[2] == 4);
  CHECK(t.b[3] == 18);
  CHECK(t.c[0] == 1);
  CHECK(t.c[1] == 1);
  CHECK(t.c[2] == 3);
  CHECK(t.l[0] == 0);
  CHECK(t.l[1] == 1);
  CHECK(t.l[3] == 33);
  CHECK(t.l[2] % 2 == 0);
  for (int k = 0; k <= 6; ++k) CHECK(t.c[k] == t.a[k] - t.b[k]);
  for (int m = 1; m <= 6; ++m) {
    BigInt conv = 0;
    for (int l = 0; l < m; ++l) conv += t.a[l] * t.a[m - l - 1];
    CHECK(t.b[m] == conv);
  }
  for (int s = 1; s <= 6; ++s) {
    BigInt conv = 0;
    for (int i = 0; i < s; ++i) conv += t.a[i] * t.b[s - i];
    CHECK(t.l[s] == conv);
  }
  CHECK(l_sequence(3)[3] == 33);
}

TEST_CASE("enumeration oracle: stream counts match the tables up to k=6") {
  const SeriesTable t = series_tables(6);
  for (int k = 0; k <= 6; ++k) {
    BigInt a_count = 0, b_count = 0, c_count = 0;
    for_each_lr_tree(k, [&](const LRTree& tree) {
      tree.validate();
      CHECK(tree.edge_count() == k);
      ++a_count;
      if (tree.has_right_root_edge())
        ++b_count;
      else
        ++c_count;
    });
    CHECK(a_count == t.a[k]);
    CHECK(b_count == t.b[k]);
    CHECK(c_count == t.c[k]);
  }
  CHECK(enumerate_lr_trees(2).size() == 7);
  CHECK(enumerate_lr_trees(0).size() == 1);
  CHECK(enumerate_lr_trees(1).size() == 2);
  CHECK_THROWS_AS(for_each_lr_tree(9, [](const LRTree&) {}), DomainError);
}

TEST_CASE("closed form: a_k (k+1) = binomial(3k+1, k) up to k=50") {
  const SeriesTable t = series_tables(50);
  for (int k = 0; k <= 50; ++k) CHECK(t.a[k] * (k + 1) == binomial(3 * k + 1, k));
}

TEST_CASE("flip: examples and involution") {
  const LRTree point{};
  CHECK(flip(point) == point);

  LRTree right{1, {LRTree{}}};  // one child hanging right
  LRTree left{2, {LRTree{}}};   // one child hanging left
  CHECK(flip(right) == left);
  CHECK(flip(left) == right);
  CHECK(right.has_right_root_edge());
  CHECK_FALSE(left.has_right_root_edge());

  for (int k = 0; k <= 4; ++k)
    for_each_lr_tree(k, [&](const LRTree& t) { CHECK(flip(flip(t)) == t); });
}

TEST_CASE("flip fixed points among 2k-edge trees are counted by c_k") {
  const SeriesTable t = series_tables(4);
  for (int k = 0; k <= 4; ++k) {
    BigInt fixed = 0;
    for_each_lr_tree(2 * k, [&](const LRTree& tree) {
      if (flip(tree) == tree) ++fixed;
    });
    CHECK(fixed == t.c[k]);
  }
}

TEST_CASE("lr-tree validation") {
  LRTree bad{3, {LRTree{}}};
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("negligent numbers: examples and the two routes") {
  CHECK(negligent(0));
  CHECK(negligent(1));
  CHECK(negligent(2));
  CHECK_FALSE(negligent(3));
  CHECK(negligent(5));
  CHECK(negligent(2181));
  CHECK_FALSE(negligent(7));

  for (std::uint64_t v = 0; v <= 20000; ++v)
    CHECK(negligent(v) == negligent_by_closure(v));

  const auto all = negligent_numbers_up_to(20000);
  std::size_t idx = 0;
  for (std::uint64_t v = 0; v <= 20000; ++v) {
    const bool listed = idx < all.size() && all[idx] == v;
    if (listed) ++idx;
    CHECK(listed == negligent(v));
  }

  // closure property: negligent v stays negligent under both operations
  for (std::uint64_t v : negligent_numbers_up_to(5000)) {
    CHECK(negligent(2 * v));
    CHECK(negligent(4 * v + 1));
  }
}

TEST_CASE("parity rules against the exact tables up to 128") {
  const int kMax = 128;
  const SeriesTable t = series_tables(kMax);
  for (int k = 0; k <= kMax; ++k) {
    CHECK(parity_a(k) == static_cast<int>(t.a[k] % 2));
    CHECK(parity_b(k) == static_cast<int>(t.b[k] % 2));
    CHECK(parity_c(k) == static_cast<int>(t.c[k] % 2));
    CHECK(parity_l(k) == static_cast<int>(t.l[k] % 2));
  }
  for (int k = 0; 2 * k + 1 <= kMax; ++k) {
    CHECK(t.b[2 * k] % 2 == 0);
    CHECK(t.b[2 * k + 1] % 2 == t.a[k] % 2);
    CHECK(t.a[2 * k + 1] % 2 == 0);
    CHECK(t.a[2 * k] % 2 == t.c[k] % 2);
  }
  for (int k = 0; 4 * k + 3 <= kMax; ++k) {
    CHECK(t.c[4 * k + 1] % 2 == t.c[k] % 2);
    CHECK(t.c[2 * k] % 2 == t.c[k] % 2);
    CHECK(t.c[4 * k + 3] % 2 == 0);
    CHECK(t.b[4 * k + 3] % 2 == 0);
    CHECK(t.b[4 * k + 1] % 2 == t.a[2 * k] % 2);
  }
}

TEST_CASE("parity_l spot values") {
  CHECK(parity_l(0) == 0);
  CHECK(parity_l(1) == 1);
  CHECK(parity_l(2) == 0);
  CHECK(parity_l(3) == 1);
}

TEST_CASE("classify_n: examples") {
  CHECK_THROWS_AS(classify_n(3), DomainError);

  const auto ten = classify_n(10);
  CHECK(ten.verdict == DivisibilityVerdict::Kind::OnlyByHalf);
  REQUIRE(ten.witness.has_value());
  CHECK(ten.witness->family == "32v+10");
  CHECK(ten.witness->v == 0);
  CHECK(ten.witness->v_negligent);

  CHECK(classify_n(26).verdict == DivisibilityVerdict::Kind::DivisibleByN);
  CHECK_FALSE(classify_n(26).witness.has_value());

  const auto big = classify_n(69802);
  CHECK(big.verdict == DivisibilityVerdict::Kind::OnlyByHalf);
  REQUIRE(big.witness.has_value());
  CHECK(big.witness->family == "32v+10");
  CHECK(big.witness->v == 2181);

  const auto eighteen = classify_n(18);
  CHECK(eighteen.verdict == DivisibilityVerdict::Kind::OnlyByHalf);
  REQUIRE(eighteen.witness.has_value());
  CHECK(eighteen.witness->family == "64v+18");
  CHECK(eighteen.witness->v == 0);

  const auto thirty_four = classify_n(34);
  CHECK(thirty_four.verdict == DivisibilityVerdict::Kind::OnlyByHalf);
  REQUIRE(thirty_four.witness.has_value());
  CHECK(thirty_four.witness->family == "64*2^k*v+16*2^k+2");
  CHECK(thirty_four.witness->k == 1);
  CHECK(thirty_four.witness->v == 0);

  CHECK(classify_n(6).verdict == DivisibilityVerdict::Kind::DivisibleByN);
  for (std::int64_t n : {4, 5, 7, 8, 9, 11, 12, 16, 100, 99999})
    if (n % 4 != 2) CHECK(classify_n(n).verdict == DivisibilityVerdict::Kind::DivisibleByN);
}

TEST_CASE("classify_n: family matcher agrees with the parity engine to 20000") {
  for (std::int64_t n = 6; n <= 20000; n += 4) {
    const auto fam = family_witness(n);
    const bool family_half = fam.has_value() && fam->v_negligent;
    const std::uint64_t s = static_cast<std::uint64_t>(n - 2) / 4 - 1;
    CHECK(family_half == (parity_l(s) == 1));
    const auto verdict = classify_n(n);
    CHECK((verdict.verdict == DivisibilityVerdict::Kind::OnlyByHalf) == family_half);
  }
}
