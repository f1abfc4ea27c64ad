// Finite distance magmas and monoids as addition tables over ranks.
//
// The elements of a structure with n non-zero elements are identified with
// their ranks 0 = e_0 < e_1 < ... < e_n, so a structure is completely
// described by the (n + 1) x (n + 1) table whose cell (i, j) is the rank of
// e_i + e_j.  Two structures are equal exactly when their tables are equal.

#ifndef DISTMON_TABLE_HPP_
#define DISTMON_TABLE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "distmon/errors.hpp"

namespace distmon {

  using element_type = std::size_t;

  class AdditionTable {
   public:
    //! Largest supported number of non-zero elements.
    static constexpr std::size_t max_order = 255;

    //! The trivial structure {0}.
    AdditionTable() : AdditionTable(0) {}

    //! Builds a table from the full square, verbatim.  Only the shape and
    //! the range of the cells are checked; axioms are not.
    static AdditionTable
    from_entries(std::size_t n,
                 std::vector<std::vector<element_type>> const& entries);

    //! Builds a symmetric table with identity row/column 0 from the packed
    //! upper triangle (1,1),(1,2),...,(1,n),(2,2),...,(n,n).
    static AdditionTable from_upper_triangle(std::size_t          n,
                                             std::span<std::uint8_t const> cells);

    //! Builds a symmetric table with identity row/column 0 and cell (i, j) =
    //! f(i, j) for 1 <= i <= j <= n.
    template <typename Func>
    static AdditionTable from_function(std::size_t n, Func&& f) {
      AdditionTable t(n);
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i; j <= n; ++j) {
          t.set_symmetric(i, j, f(i, j));
        }
      }
      return t;
    }

    std::size_t n() const noexcept {
      return _n;
    }

    std::size_t dimension() const noexcept {
      return _n + 1;
    }

    //! Unchecked lookup.
    element_type operator()(element_type i, element_type j) const noexcept {
      return _cells[i * (_n + 1) + j];
    }

    //! Checked lookup; throws DomainError if i or j is not in 0..n.
    element_type at(element_type i, element_type j) const;

    std::vector<std::uint8_t> upper_triangle() const;

    std::vector<std::vector<element_type>> rows() const;

    friend bool operator==(AdditionTable const&, AdditionTable const&)
        = default;
    friend auto operator<=>(AdditionTable const&, AdditionTable const&)
        = default;

   private:
    explicit AdditionTable(std::size_t n);

    void set_symmetric(element_type i, element_type j, element_type value);

    std::size_t               _n;
    std::vector<std::uint8_t> _cells;
  };

  //! e_i + e_j = e_max(i, j); the unique monoid of Archimedean complexity 1.
  AdditionTable max_table(std::size_t n);

  //! e_i + e_j = e_min(i + j, n); the unique monoid of complexity n.
  AdditionTable capped_naturals(std::size_t n);

  enum class Axiom {
    identity,
    symmetry,
    positivity,
    monotonicity,
    associativity
  };

  std::string_view axiom_name(Axiom a) noexcept;

  struct Violation {
    Axiom                     axiom;
    std::vector<element_type> witness;

    friend bool operator==(Violation const&, Violation const&) = default;
  };

  struct ValidationReport {
    bool is_magma = true;
    bool is_monoid = true;
    //! The first `limit` violations found, in a fixed scan order.
    std::vector<Violation> violations;
    //! Total number of violations, including those beyond the limit.
    std::size_t violation_count = 0;

    friend bool operator==(ValidationReport const&, ValidationReport const&)
        = default;
  };

  inline constexpr std::size_t default_violation_limit = 32;

  //! Checks every axiom and reports all violations (up to `limit` listed).
  //!
  //! Monotonicity is checked on adjacent cells; the witness (i, j) names a
  //! cell that exceeds its successor (i + 1, j) or (i, j + 1).  When the table
  //! is symmetric, associativity is checked on sorted triples i <= j <= k
  //! only; otherwise on all ordered triples.
  ValidationReport validate(AdditionTable const& t,
                            std::size_t          limit = default_violation_limit);

  bool is_magma(AdditionTable const& t);

  //! Fast associativity test with early exit; assumes symmetry.
  bool is_associative(AdditionTable const& t);

  element_type oplus(AdditionTable const& t, element_type i, element_type j);

  //! An addition table known to satisfy all monoid axioms.
  class Monoid {
   public:
    //! Throws NotAMonoid if `t` fails any axiom.
    explicit Monoid(AdditionTable t);

    //! For callers that have already established the axioms (the census and
    //! the builders).  Debug builds still verify.
    static Monoid unchecked(AdditionTable t);

    AdditionTable const& table() const noexcept {
      return _table;
    }

    std::size_t n() const noexcept {
      return _table.n();
    }

    element_type operator()(element_type i, element_type j) const noexcept {
      return _table(i, j);
    }

    friend bool operator==(Monoid const&, Monoid const&) = default;
    friend auto operator<=>(Monoid const&, Monoid const&) = default;

   private:
    struct unchecked_tag {};
    Monoid(AdditionTable t, unchecked_tag) : _table(std::move(t)) {}

    AdditionTable _table;
  };

  //! m * e_i (m >= 1) by iterated addition.  Stabilises for m >= n.
  element_type multiple(Monoid const& t, element_type i, std::size_t m);

  //! As above, but validates `t` first and throws NotAMonoid on failure.
  element_type multiple(AdditionTable const& t, element_type i, std::size_t m);

}  // namespace distmon

#endif  // DISTMON_TABLE_HPP_
