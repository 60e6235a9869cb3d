#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <random>

#include "circletree/census.hpp"
#include "circletree/census_cache.hpp"
#include "circletree/rotation_system.hpp"
#include "helpers.hpp"

using namespace circletree;
using circletree::testing::for_each_prufer_sequence;

TEST_CASE("count_f small values") {
  CHECK(count_f(3).f_n == 0);

  const CensusReport four = count_f(4);
  CHECK(four.f_n == 4);
  CHECK(four.f_mod_n == 0);
  CHECK(four.class_count == 1);
  CHECK(four.orbit_periods == std::map<int, std::uint64_t>{{4, 1}});
  CHECK(four.by_form == std::map<std::string, std::uint64_t>{{"T3^1[1]", 4}});
  CHECK(four.p_n == -1);

  CHECK(count_f(5).f_n == 65);
  CHECK(count_f(5).f_mod_n == 0);

  const CensusReport six = count_f(6);
  CHECK(six.f_n == 762);
  CHECK(six.p_n == 0);  // the self-mirror half-period form needs ten points
  CHECK(six.orbit_periods == std::map<int, std::uint64_t>{{3, 2}, {6, 126}});
  CHECK(six.labeled_from_orbits == six.f_n);

  CHECK(count_f(7).f_n == 7756);
}

TEST_CASE("count_f rejects out-of-range n") {
  CHECK_THROWS_AS(count_f(2), DomainError);
  CHECK_THROWS_AS(count_f(12), DomainError);
}

TEST_CASE("kernel agrees with the library path exhaustively to n=6") {
  for (int n = 4; n <= 6; ++n)
    for_each_prufer_sequence(n, [&](const std::vector<int>& seq) {
      detail::SmallTree st;
      std::uint8_t raw[12];
      for (std::size_t i = 0; i < seq.size(); ++i) raw[i] = static_cast<std::uint8_t>(seq[i]);
      detail::decode_prufer(n, raw, st);
      const CircleTree t = detail::to_circle_tree(st);
      CHECK(t.edges() == tree_from_prufer(seq).edges());
      CHECK(detail::genus_one_fast(st) == is_genus_one(t.graph()));
      CHECK(detail::genus_fast(st) == genus(t.graph()));
      int period = 0;
      const bool rep = detail::rotation_representative(st, period);
      CHECK(period == min_period(t.graph()));
      CHECK(rep == (canonicalize(t.graph()).edges == t.edges()));
    });
}

TEST_CASE("census totals are identical across worker counts") {
  const CensusReport one = count_f(6, {.jobs = 1});
  const CensusReport two = count_f(6, {.jobs = 2});
  const CensusReport four = count_f(6, {.jobs = 4});
  CHECK(one.f_n == two.f_n);
  CHECK(one.f_n == four.f_n);
  CHECK(one.by_form == two.by_form);
  CHECK(one.by_form == four.by_form);
  CHECK(one.orbit_periods == four.orbit_periods);
  CHECK(one.class_count == four.class_count);
}

TEST_CASE("l_count") {
  CHECK(l_count(CircleGraph(4, {{1, 3}, {2, 4}, {1, 2}})) == 4);
  CHECK_THROWS_AS(l_count(CircleGraph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}})), DomainError);
}

TEST_CASE("count_P_n") {
  CHECK(count_P_n(6) == 0);
  CHECK_THROWS_AS(count_P_n(8), DomainError);
  CHECK_THROWS_AS(count_P_n(7), DomainError);
}

TEST_CASE("census cache round trip and version pinning") {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("circletree-test-" + std::to_string(std::random_device{}()));
  struct Cleanup {
    std::filesystem::path p;
    ~Cleanup() { std::filesystem::remove_all(p); }
  } cleanup{dir};

  CHECK_FALSE(census_cache_lookup(dir, 6).has_value());
  const CensusReport six = count_f(6);
  census_cache_store(dir, six);
  const auto row = census_cache_lookup(dir, 6);
  REQUIRE(row.has_value());
  CHECK(row->f_n == 762);
  CHECK(row->p_n == 0);
  CHECK(row->kernel_version == kKernelVersion);

  // summaries hit the cache; rows from другой kernel versions are ignored
  const CensusCacheRow summary = census_summary(6, {}, dir);
  CHECK(summary.f_n == 762);

  std::ofstream out(census_cache_file(dir), std::ios::trunc);
  out << kCensusCacheHeader << "\n5,999,4,,other-kernel\n";
  out.close();
  CHECK_FALSE(census_cache_lookup(dir, 5).has_value());
  const CensusCacheRow recomputed = census_summary(5, {}, dir);
  CHECK(recomputed.f_n == 65);
  const auto reread = census_cache_lookup(dir, 5);
  REQUIRE(reread.has_value());
  CHECK(reread->f_n == 65);
}

TEST_CASE("verify_suite passes for small n") {
  const VerifyReport rep = verify_suite(5);
  CHECK(rep.all_pass());
  bool saw_equivalence = false;
  for (const VerifyLine& l : rep.lines)
    if (l.claim.find("equivalence") != std::string::npos) saw_equivalence = true;
  CHECK(saw_equivalence);
}
