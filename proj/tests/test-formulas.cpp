#include <algorithm>
#include <set>
#include <vector>

#include "catch_amalgamated.hpp"

#include "distmon/formulas.hpp"
#include "distmon/robbins.hpp"
#include "oracle.hpp"

using namespace distmon;

namespace {

  BigCount pow_big(std::size_t base, std::size_t e) {
    BigCount r = 1;
    for (std::size_t i = 0; i < e; ++i) {
      r *= base;
    }
    return r;
  }

  // The defining sum, evaluated over compositions produced here by binary
  // cut masks rather than by the library generator.
  BigCount dm2_by_cuts(std::size_t n) {
    BigCount total = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
      std::vector<std::size_t> parts{1};
      for (std::size_t b = 0; b + 1 < n; ++b) {
        if (mask >> b & 1) {
          parts.push_back(1);
        } else {
          ++parts.back();
        }
      }
      if (parts.size() > n - 1) {
        continue;
      }
      BigCount term = 1;
      for (std::size_t j = 0; j < parts.size(); ++j) {
        term *= pow_big(j + 1, parts[j] - 1);
      }
      total += term;
    }
    return total;
  }

  // All maps [n] -> [n] that pass the membership test.
  std::vector<CeilingMap> brute_A(std::size_t n) {
    std::vector<CeilingMap>  out;
    std::vector<std::size_t> a(n, 1);
    while (true) {
      CeilingMap m(a);
      if (m.is_valid()) {
        out.push_back(m);
      }
      std::size_t i = 0;
      while (i < n && a[i] == n) {
        a[i++] = 1;
      }
      if (i == n) {
        return out;
      }
      ++a[i];
    }
  }

  bool pointwise_le(CeilingMap const& x, CeilingMap const& y) {
    for (std::size_t i = 1; i <= x.n(); ++i) {
      if (x(i) > y(i)) {
        return false;
      }
    }
    return true;
  }

  // Chains a^(k) <= ... <= a^(1) counted by brute force over tuples.
  std::size_t brute_chains(std::size_t n, std::size_t k) {
    auto        all = brute_A(n);
    std::size_t count = 0;
    auto rec = [&](auto&& self, std::size_t depth, CeilingMap const* above)
        -> void {
      if (depth == k) {
        ++count;
        return;
      }
      for (auto const& m : all) {
        if (above == nullptr || pointwise_le(m, *above)) {
          self(self, depth + 1, &m);
        }
      }
    };
    rec(rec, 0, nullptr);
    return count;
  }

}  // namespace

TEST_CASE("compositions in colex order", "[formulas][quick]") {
  using V = std::vector<std::vector<std::size_t>>;
  REQUIRE(compositions(1) == V{{1}});
  REQUIRE(compositions(3) == V{{1, 1, 1}, {2, 1}, {1, 2}, {3}});
  for (std::size_t n = 1; n <= 12; ++n) {
    auto c = compositions(n);
    REQUIRE(c.size() == std::size_t{1} << (n - 1));
    REQUIRE(std::set<std::vector<std::size_t>>(c.begin(), c.end()).size()
            == c.size());
  }
}

TEST_CASE("complexity-2 count", "[formulas][quick]") {
  REQUIRE(dm_n_2(2) == 1);
  REQUIRE(dm_n_2(3) == 4);
  REQUIRE(dm_n_2(4) == 14);
  REQUIRE_THROWS_AS(dm_n_2(1), DomainError);
  REQUIRE_THROWS_AS(dm_n_2(0), DomainError);
  for (std::size_t n = 2; n <= 18; ++n) {
    REQUIRE(dm_n_2(n) == dm2_by_cuts(n));
  }
  for (std::size_t n = 2; n <= 15; ++n) {
    REQUIRE(dm_n_2(n) == bell(n) - 1);
  }
}

TEST_CASE("Bell and Stirling numbers", "[formulas][quick]") {
  REQUIRE(bell(0) == 1);
  REQUIRE(bell(3) == 5);
  REQUIRE(bell(5) == 52);
  REQUIRE(bell(15) == 1382958545);
  REQUIRE(to_decimal(bell(26)) == "49631246523618756274");
  REQUIRE(stirling2(0, 0) == 1);
  REQUIRE(stirling2(5, 0) == 0);
  REQUIRE(stirling2(4, 2) == 7);
  REQUIRE(stirling2(3, 5) == 0);
  for (std::size_t n = 0; n <= 20; ++n) {
    REQUIRE(stirling2(n, n) == 1);
    BigCount sum = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      sum += stirling2(n, k);
    }
    REQUIRE(sum == bell(n));
  }
  REQUIRE(binomial(10, 3) == 120);
  REQUIRE(binomial(3, 5) == 0);
}

TEST_CASE("Bell and Stirling numbers against set partitions",
          "[formulas][oracle]") {
  for (std::size_t n = 0; n <= 9; ++n) {
    auto parts = oracle::set_partitions(n);
    REQUIRE(bell(n) == parts.size());
    for (std::size_t k = 0; k <= n; ++k) {
      auto blocks = std::count_if(
          parts.begin(), parts.end(),
          [k](auto const& p) { return oracle::block_count(p) == k; });
      REQUIRE(stirling2(n, k) == blocks);
    }
  }
}

TEST_CASE("complexity-2 count outgrows every exponential", "[formulas][quick]") {
  // First n past which bell(n) - 1 > b^n holds, found independently.
  std::vector<std::pair<std::size_t, std::size_t>> const first
      = {{2, 5}, {3, 9}, {5, 22}, {10, 61}};
  for (auto [b, n0] : first) {
    REQUIRE_FALSE(dm_n_2(n0 - 1) > pow_big(b, n0 - 1));
    for (std::size_t n = n0; n < n0 + 20; ++n) {
      REQUIRE(dm_n_2(n) > pow_big(b, n));
    }
  }
}

TEST_CASE("near-top closed forms", "[formulas][quick]") {
  REQUIRE(dm_near_top(1, 0) == 1);
  REQUIRE(dm_near_top(7, 0) == 1);
  REQUIRE(dm_near_top(3, 1) == 4);
  REQUIRE(dm_near_top(6, 1) == 10);
  REQUIRE(dm_near_top(9, 2) == 137);
  REQUIRE(dm_near_top(10, 2) == 2 * 100 - 20 - 8 + 0 + 0);
  REQUIRE(dm_near_top(11, 2) == 2 * 121 - 22 - 8 + 0 + 1);
  REQUIRE(dm_near_top(12, 2) == 2 * 144 - 24 - 8 + 1 + 0);
  REQUIRE_THROWS_AS(dm_near_top(2, 1), DomainError);
  REQUIRE_THROWS_AS(dm_near_top(8, 2), DomainError);
  REQUIRE_THROWS_AS(dm_near_top(20, 3), DomainError);
  REQUIRE_THROWS_AS(dm_near_top(0, 0), DomainError);
}

TEST_CASE("binomial lower bound", "[formulas][quick]") {
  REQUIRE(dm_lower_bound(5, 1) == 3);
  REQUIRE(dm_lower_bound(10, 2) == 28);
  for (std::size_t k = 1; k <= 6; ++k) {
    REQUIRE(dm_lower_bound(k + 2, k) == 1);
  }
  REQUIRE_THROWS_AS(dm_lower_bound(5, 0), DomainError);
  REQUIRE_THROWS_AS(dm_lower_bound(4, 3), DomainError);
}

TEST_CASE("ceiling maps", "[formulas][quick]") {
  REQUIRE(enumerate_A(1) == std::vector<CeilingMap>{CeilingMap({1})});
  auto a3 = enumerate_A(3);
  REQUIRE(a3.size() == 4);
  std::set<std::vector<std::size_t>> fixed;
  for (auto const& a : a3) {
    REQUIRE(a.is_valid());
    fixed.insert(a.fixed_points());
  }
  REQUIRE(fixed
          == std::set<std::vector<std::size_t>>{{3}, {1, 3}, {2, 3}, {1, 2, 3}});
  REQUIRE(CeilingMap::from_fixed_points(5, {2, 5}).targets()
          == std::vector<std::size_t>{2, 2, 5, 5, 5});
  REQUIRE_FALSE(CeilingMap({2, 3, 3}).is_valid());
  REQUIRE_FALSE(CeilingMap({1, 1}).is_valid());
  REQUIRE_THROWS_AS(CeilingMap::from_fixed_points(3, {1}), DomainError);
  REQUIRE_THROWS_AS(CeilingMap::from_fixed_points(3, {3, 4}), DomainError);
  REQUIRE_THROWS_AS(enumerate_A(0), DomainError);
  REQUIRE_THROWS_AS(enumerate_A(25), ScaleGuardError);
  for (std::size_t n = 1; n <= 12; ++n) {
    REQUIRE(enumerate_A(n).size() == std::size_t{1} << (n - 1));
  }
}

TEST_CASE("ceiling maps against every map on [n]", "[formulas][oracle]") {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto lib = enumerate_A(n);
    auto bf  = brute_A(n);
    std::sort(lib.begin(), lib.end());
    std::sort(bf.begin(), bf.end());
    REQUIRE(lib == bf);
  }
}

TEST_CASE("chains in A(n)", "[formulas][quick]") {
  REQUIRE(count_A_chains(3, 2).formula == 9);
  REQUIRE(count_A_chains(1, 4).formula == 1);
  for (std::size_t n = 1; n <= 12; ++n) {
    REQUIRE(count_A_chains(n, 1).formula == pow_big(2, n - 1));
  }
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::size_t k = 1; k <= 5; ++k) {
      auto c = count_A_chains(n, k);
      REQUIRE(c.formula == pow_big(k + 1, n - 1));
      REQUIRE(c.enumerated);
      REQUIRE(*c.enumerated == c.formula);
    }
  }
  REQUIRE_FALSE(count_A_chains(40, 7).enumerated);
  REQUIRE_THROWS_AS(count_A_chains(0, 1), DomainError);
  REQUIRE_THROWS_AS(count_A_chains(3, 0), DomainError);
}

TEST_CASE("chains in A(n) against pointwise tuples", "[formulas][oracle]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) {
      REQUIRE(count_A_chains(n, k).formula == brute_chains(n, k));
    }
  }
}

TEST_CASE("Robbins constants match the product formula", "[formulas][quick]") {
  // prod_{j=0}^{n-1} (3j + 1)! / (n + j)!, evaluated with exact integers.
  auto fact = [](std::size_t m) {
    BigCount r = 1;
    for (std::size_t i = 2; i <= m; ++i) {
      r *= i;
    }
    return r;
  };
  for (std::size_t n = 0; n < robbins_numbers.size(); ++n) {
    BigCount num = 1, den = 1;
    for (std::size_t j = 0; j < n; ++j) {
      num *= fact(3 * j + 1);
      den *= fact(n + j);
    }
    REQUIRE(num % den == 0);
    REQUIRE(num / den == robbins_numbers[n]);
  }
}

TEST_CASE("decimal round trip", "[formulas][quick]") {
  BigCount big = bell(40);
  REQUIRE(parse_decimal(to_decimal(big)) == big);
  REQUIRE(parse_decimal("0") == 0);
  REQUIRE_THROWS_AS(parse_decimal(""), ParseError);
  REQUIRE_THROWS_AS(parse_decimal("-3"), ParseError);
  REQUIRE_THROWS_AS(parse_decimal("12a"), ParseError);
}
