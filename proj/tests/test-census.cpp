#include <algorithm>
#include <cstdlib>
#include <vector>

#include "catch_amalgamated.hpp"

#include "distmon/arch.hpp"
#include "distmon/census.hpp"
#include "distmon/robbins.hpp"
#include "oracle.hpp"

using namespace distmon;

namespace {

  CensusResult run(std::size_t n,
                   bool        magmas = false,
                   std::size_t jobs = 1,
                   std::size_t depth = 0,
                   bool        emit = false) {
    SearchConfig cfg;
    cfg.n            = n;
    cfg.want_magmas  = magmas;
    cfg.job_count    = jobs;
    cfg.prefix_depth = depth;
    cfg.emit         = emit;
    return enumerate(cfg);
  }

  std::map<std::size_t, BigCount> strata(std::initializer_list<int> counts) {
    std::map<std::size_t, BigCount> out;
    std::size_t                     k = 1;
    for (int c : counts) {
      out[k++] = c;
    }
    return out;
  }

}  // namespace

TEST_CASE("small censuses", "[census][quick]") {
  auto r3 = run(3, true);
  REQUIRE(r3.magma_count == BigCount(7));
  REQUIRE(r3.monoid_count == 6);
  REQUIRE(r3.by_arch == strata({1, 4, 1}));

  auto r4 = run(4);
  REQUIRE_FALSE(r4.magma_count);
  REQUIRE(r4.monoid_count == 22);
  REQUIRE(r4.by_arch == strata({1, 14, 6, 1}));

  REQUIRE(run(1).by_arch == strata({1}));
  REQUIRE(run(2).by_arch == strata({1, 1}));
  REQUIRE(run(5).by_arch == strata({1, 51, 33, 8, 1}));
  REQUIRE(run(6).by_arch == strata({1, 202, 183, 54, 10, 1}));
}

TEST_CASE("complexity 1 at n = 2 is a single monoid", "[census][quick]") {
  // DM(2, 1) = 1 while 2n - 2 = 2: the near-top formula starts at n = 3.
  auto r = run(2, false, 1, 0, true);
  REQUIRE(r.by_arch.at(1) == 1);
  REQUIRE(r.by_arch.at(2) == 1);
  REQUIRE(r.emitted
          == std::vector<AdditionTable>{max_table(2), capped_naturals(2)});
}

TEST_CASE("census matches brute force", "[census][oracle]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto bf = oracle::brute_force(n);
    auto r  = run(n, true, 1, 0, true);
    REQUIRE(*r.magma_count == bf.magmas.size());
    REQUIRE(r.monoid_count == bf.monoids.size());
    std::sort(bf.monoids.begin(), bf.monoids.end(),
              [](auto const& a, auto const& b) {
                return a.upper_triangle() < b.upper_triangle();
              });
    REQUIRE(r.emitted == bf.monoids);
  }
}

TEST_CASE("magma counts are Robbins numbers", "[census][quick]") {
  for (std::size_t n = 1; n <= 6; ++n) {
    REQUIRE(*run(n, true).magma_count == robbins_numbers[n]);
  }
}

TEST_CASE("magma mode counts the same monoids", "[census][quick]") {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto a = run(n, true, 1, 0, true);
    auto b = run(n, false, 1, 0, true);
    REQUIRE(a.monoid_count == b.monoid_count);
    REQUIRE(a.by_arch == b.by_arch);
    REQUIRE(a.emitted == b.emitted);
  }
}

TEST_CASE("work partitioning", "[census][quick]") {
  SearchConfig cfg;
  cfg.n            = 3;
  cfg.prefix_depth = 1;
  REQUIRE(partition_work(cfg)
          == std::vector<SearchPrefix>{{1}, {2}, {3}});
  cfg.n = 1;
  REQUIRE(partition_work(cfg) == std::vector<SearchPrefix>{{1}});

  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t depth = 0; depth <= std::min<std::size_t>(3, free_cells(n));
         ++depth) {
      for (bool magmas : {false, true}) {
        SearchConfig c;
        c.n            = n;
        c.prefix_depth = depth;
        c.want_magmas  = magmas;
        c.emit         = true;
        auto reference = run(n, magmas, 1, 0, true);
        REQUIRE(enumerate(c) == reference);
        c.job_count = 3;
        REQUIRE(enumerate(c) == reference);

        BigCount                   sum = 0;
        std::vector<AdditionTable> seen;
        auto                       prefixes = partition_work(c);
        REQUIRE(std::is_sorted(prefixes.begin(), prefixes.end()));
        for (auto const& p : prefixes) {
          auto part = enumerate_subtree(c, p);
          sum += part.monoid_count;
          seen.insert(seen.end(), part.emitted.begin(), part.emitted.end());
        }
        REQUIRE(sum == reference.monoid_count);
        REQUIRE(seen == reference.emitted);
      }
    }
  }
}

TEST_CASE("thread count does not change the result", "[census][quick]") {
  for (std::size_t n = 4; n <= 6; ++n) {
    auto one  = run(n, true, 1, 0, true);
    auto four = run(n, true, 4, 0, true);
    REQUIRE(one == four);
  }
}

TEST_CASE("complexity filter", "[census][quick]") {
  SearchConfig cfg;
  cfg.n           = 5;
  cfg.arch_filter = 4;
  cfg.emit        = true;
  auto r          = enumerate(cfg);
  REQUIRE(r.monoid_count == 8);
  REQUIRE(r.by_arch == std::map<std::size_t, BigCount>{{4, 8}});
  REQUIRE(r.emitted.size() == 8);
  for (auto const& t : r.emitted) {
    REQUIRE(arch_complexity(t) == 4);
  }
}

TEST_CASE("emitted monoids are valid and correctly bucketed",
          "[census][property]") {
  for (std::size_t n = 1; n <= 7; ++n) {
    auto                            r = run(n, false, 1, 0, true);
    std::map<std::size_t, BigCount> recount;
    for (auto const& t : r.emitted) {
      REQUIRE(validate(t).is_monoid);
      recount[arch_complexity(t)] += 1;
    }
    for (auto& [k, c] : r.by_arch) {
      REQUIRE(recount[k] == c);
    }
    REQUIRE(std::adjacent_find(r.emitted.begin(), r.emitted.end(),
                               [](auto const& a, auto const& b) {
                                 return !(a.upper_triangle()
                                          < b.upper_triangle());
                               })
            == r.emitted.end());
  }
}

TEST_CASE("census against the closed forms", "[census][property]") {
  auto rows = dm_table(8);
  REQUIRE(rows.size() == 8);
  for (std::size_t n = 1; n <= 8; ++n) {
    auto const& row = rows[n - 1];
    REQUIRE(row.size() == n);
    REQUIRE(row[0] == 1);
    REQUIRE(row[n - 1] == 1);
    if (n >= 2) {
      REQUIRE(row[1] == dm_n_2(n));
    }
    if (n >= 3) {
      REQUIRE(row[n - 2] == 2 * n - 2);
    }
    for (std::size_t k = 1; k <= 3 && n >= k + 2; ++k) {
      REQUIRE(dm_lower_bound(n, k) <= row[n - k - 1]);
    }
  }
  REQUIRE(rows[7]
          == std::vector<BigCount>{1, 4139, 6495, 2462, 558, 105, 14, 1});
}

TEST_CASE("dm_table examples", "[census][quick]") {
  REQUIRE(dm_table(2) == std::vector<std::vector<BigCount>>{{1}, {1, 1}});
  auto t5 = dm_table(5, 2);
  REQUIRE(t5[4][3] == 8);
  REQUIRE(t5[4][1] == 51);
}

TEST_CASE("scale guards and bad configurations", "[census][quick]") {
  if (scale_override_from_env()) {
    SKIP("DISTMON_SCALE_OVERRIDE is set");
  }
  SearchConfig cfg;
  cfg.n = census_monoid_guard + 1;
  REQUIRE_THROWS_AS(enumerate(cfg), ScaleGuardError);
  cfg.n           = census_magma_guard + 1;
  cfg.want_magmas = true;
  REQUIRE_THROWS_AS(enumerate(cfg), ScaleGuardError);
  REQUIRE_THROWS_AS(dm_table(9), ScaleGuardError);

  SearchConfig bad;
  bad.n = 0;
  REQUIRE_THROWS_AS(enumerate(bad), DomainError);
  bad.n           = 3;
  bad.arch_filter = 0;
  REQUIRE_THROWS_AS(enumerate(bad), DomainError);
  bad.arch_filter = 4;
  REQUIRE_THROWS_AS(enumerate(bad), DomainError);
  bad.arch_filter.reset();
  bad.job_count = 0;
  REQUIRE_THROWS_AS(enumerate(bad), DomainError);
  bad.job_count    = 1;
  bad.prefix_depth = 7;
  REQUIRE_THROWS_AS(enumerate(bad), DomainError);
}

TEST_CASE("near-top stratum at n = 9", "[census][deep]") {
  SearchConfig cfg;
  cfg.n           = 9;
  cfg.arch_filter = 7;
  cfg.allow_large = true;
  REQUIRE(enumerate(cfg).monoid_count == dm_near_top(9, 2));
}
