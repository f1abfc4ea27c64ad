#include <algorithm>
#include <cstdint>
#include <vector>

#include "catch_amalgamated.hpp"

#include "distmon/table.hpp"
#include "oracle.hpp"

using namespace distmon;

TEST_CASE("from_entries accepts a well-formed square", "[table][quick]") {
  auto t = AdditionTable::from_entries(1, {{0, 1}, {1, 1}});
  REQUIRE(t.n() == 1);
  REQUIRE(t == max_table(1));
  REQUIRE(t == capped_naturals(1));
  REQUIRE(t.rows() == std::vector<std::vector<element_type>>{{0, 1}, {1, 1}});
}

TEST_CASE("from_entries rejects bad shape and range", "[table][quick]") {
  REQUIRE_THROWS_AS(AdditionTable::from_entries(1, {{0, 1}, {1, 2}}),
                    ParseError);
  REQUIRE_THROWS_AS(AdditionTable::from_entries(1, {{0, 1}, {1}}), ParseError);
  REQUIRE_THROWS_AS(AdditionTable::from_entries(2, {{0, 1, 2}, {1, 2, 2}}),
                    ParseError);
  REQUIRE_THROWS_AS(
      AdditionTable::from_entries(AdditionTable::max_order + 1, {}),
      ParseError);
  std::uint8_t const short_cells[] = {1, 1};
  REQUIRE_THROWS_AS(AdditionTable::from_upper_triangle(2, short_cells),
                    ParseError);
}

TEST_CASE("the worked sup-addition table", "[table][quick]") {
  auto t   = oracle::example_table();
  auto rep = validate(t);
  REQUIRE(rep.is_magma);
  REQUIRE(rep.is_monoid);
  REQUIRE(rep.violations.empty());
  REQUIRE(rep.violation_count == 0);
  REQUIRE(t.rows()[1] == std::vector<element_type>{1, 2, 2, 4, 5, 5});
  REQUIRE(oplus(t, 2, 3) == 5);
  REQUIRE(oplus(t, 1, 3) == 4);
  REQUIRE(multiple(t, 3, 2) == 5);
  REQUIRE(multiple(t, 1, 2) == 2);
  REQUIRE(multiple(t, 1, 3) == 2);
}

TEST_CASE("extreme tables are monoids", "[table][quick]") {
  for (std::size_t n = 0; n <= 12; ++n) {
    REQUIRE(validate(max_table(n)).is_monoid);
    REQUIRE(validate(capped_naturals(n)).is_monoid);
  }
  auto c = capped_naturals(5);
  REQUIRE(oplus(c, 2, 2) == 4);
  REQUIRE(oplus(c, 3, 4) == 5);
  REQUIRE(multiple(c, 1, 3) == 3);
  REQUIRE(multiple(c, 2, 3) == 5);
  REQUIRE(multiple(max_table(4), 3, 7) == 3);
}

TEST_CASE("the non-associative magma on three elements", "[table][quick]") {
  auto t   = oracle::non_associative_3();
  auto rep = validate(t);
  REQUIRE(rep.is_magma);
  REQUIRE_FALSE(rep.is_monoid);
  REQUIRE(rep.violation_count >= 1);
  REQUIRE(std::all_of(rep.violations.begin(), rep.violations.end(),
                      [](Violation const& v) {
                        return v.axiom == Axiom::associativity
                               && v.witness.size() == 3;
                      }));
  // (1 + 1) + 2 = 2 + 2 = 3 but 1 + (1 + 2) = 1 + 2 = 2.
  REQUIRE(rep.violations.front().witness
          == std::vector<element_type>{1, 1, 2});
  REQUIRE_FALSE(is_associative(t));
  REQUIRE(is_magma(t));
  REQUIRE_THROWS_AS(Monoid(t), NotAMonoid);
  REQUIRE_THROWS_AS(multiple(t, 1, 2), NotAMonoid);
}

TEST_CASE("brute force finds exactly one non-associative magma at n = 3",
          "[table][oracle]") {
  auto bf = oracle::brute_force(3);
  REQUIRE(bf.magmas.size() == 7);
  REQUIRE(bf.monoids.size() == 6);
  std::vector<AdditionTable> odd;
  for (auto const& t : bf.magmas) {
    if (std::find(bf.monoids.begin(), bf.monoids.end(), t)
        == bf.monoids.end()) {
      odd.push_back(t);
    }
  }
  REQUIRE(odd == std::vector<AdditionTable>{oracle::non_associative_3()});
}

TEST_CASE("each broken axiom is reported", "[table][quick]") {
  SECTION("identity") {
    auto t = AdditionTable::from_entries(2, {{0, 2, 2}, {1, 2, 2}, {2, 2, 2}});
    auto rep = validate(t);
    REQUIRE_FALSE(rep.is_magma);
    REQUIRE(std::any_of(
        rep.violations.begin(), rep.violations.end(),
        [](Violation const& v) { return v.axiom == Axiom::identity; }));
  }
  SECTION("symmetry") {
    auto t = AdditionTable::from_entries(2, {{0, 1, 2}, {1, 2, 2}, {2, 1, 2}});
    auto rep = validate(t);
    REQUIRE_FALSE(rep.is_magma);
    REQUIRE(std::any_of(
        rep.violations.begin(), rep.violations.end(),
        [](Violation const& v) { return v.axiom == Axiom::symmetry; }));
  }
  SECTION("positivity") {
    auto t = AdditionTable::from_entries(2, {{0, 1, 2}, {1, 1, 1}, {2, 1, 2}});
    auto rep = validate(t);
    REQUIRE_FALSE(rep.is_magma);
    REQUIRE(std::any_of(
        rep.violations.begin(), rep.violations.end(),
        [](Violation const& v) { return v.axiom == Axiom::positivity; }));
  }
  SECTION("monotonicity") {
    auto t = AdditionTable::from_entries(
        3, {{0, 1, 2, 3}, {1, 3, 2, 3}, {2, 2, 3, 3}, {3, 3, 3, 3}});
    auto rep = validate(t);
    REQUIRE_FALSE(rep.is_magma);
    REQUIRE(std::any_of(rep.violations.begin(), rep.violations.end(),
                        [](Violation const& v) {
                          return v.axiom == Axiom::monotonicity
                                 && v.witness
                                        == std::vector<element_type>{1, 1};
                        }));
  }
  REQUIRE(axiom_name(Axiom::associativity) == "associativity");
}

TEST_CASE("violation list is capped but the count is not", "[table][quick]") {
  std::vector<std::vector<element_type>> rows(6, std::vector<element_type>(6, 0));
  // Zero everywhere: identity, positivity and more fail in many cells.
  auto t    = AdditionTable::from_entries(5, rows);
  auto full = validate(t, 1000);
  auto cap  = validate(t, 3);
  REQUIRE(full.violation_count > 3);
  REQUIRE(cap.violations.size() == 3);
  REQUIRE(cap.violation_count == full.violation_count);
  REQUIRE(std::equal(cap.violations.begin(), cap.violations.end(),
                     full.violations.begin()));
}

TEST_CASE("validate is pure", "[table][quick]") {
  auto t    = oracle::non_associative_3();
  auto copy = t;
  auto r1   = validate(t);
  auto r2   = validate(t);
  REQUIRE(r1 == r2);
  REQUIRE(t == copy);
}

TEST_CASE("checked access", "[table][quick]") {
  auto t = capped_naturals(3);
  REQUIRE(t.at(3, 3) == 3);
  REQUIRE_THROWS_AS(t.at(4, 0), DomainError);
  REQUIRE_THROWS_AS(oplus(t, 0, 4), DomainError);
  REQUIRE_THROWS_AS(multiple(Monoid(t), 1, 0), DomainError);
  REQUIRE_THROWS_AS(multiple(Monoid(t), 4, 1), DomainError);
}

TEST_CASE("properties over every magma with n <= 5", "[table][property]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto bf = oracle::brute_force(n);
    for (auto const& t : bf.magmas) {
      auto upper = t.upper_triangle();
      REQUIRE(upper.size() == n * (n + 1) / 2);
      REQUIRE(AdditionTable::from_upper_triangle(n, upper) == t);
      REQUIRE(AdditionTable::from_entries(n, t.rows()) == t);
      REQUIRE(is_magma(t));
    }
    for (auto const& t : bf.monoids) {
      Monoid m(t);
      for (element_type i = 1; i <= n; ++i) {
        REQUIRE(multiple(m, i, 1) == i);
        for (std::size_t k = 1; k <= n + 1; ++k) {
          REQUIRE(multiple(m, i, k) <= multiple(m, i, k + 1));
        }
        REQUIRE(multiple(m, i, n) == multiple(m, i, n + 3));
      }
    }
    for (auto const& t : bf.magmas) {
      bool in = std::find(bf.monoids.begin(), bf.monoids.end(), t)
                != bf.monoids.end();
      REQUIRE(is_associative(t) == in);
    }
  }
}
