// Explicit families of distance monoids: sup-addition on rational carriers,
// the complexity-2 family parametrised by nested fixed-point sets, the
// binomial lower-bound family and the short-progression family.

#ifndef DISTMON_BUILDERS_HPP_
#define DISTMON_BUILDERS_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "distmon/table.hpp"

namespace distmon {

  using Rational = boost::multiprecision::cpp_rational;

  //! Parses "7", "7/2" or "-1/3"; throws ParseError otherwise.
  Rational parse_rational(std::string const& text);

  struct SupBuild {
    AdditionTable table;
    bool          is_monoid = false;
  };

  //! a + b = the largest carrier value <= a + b, where the carrier is
  //! {0} u values.  The result is always a magma; associativity is tested,
  //! not assumed.
  SupBuild sup_monoid(std::span<Rational const> values);

  //! A complexity-2 monoid: the class sizes plus, for every class j >= 2,
  //! the fixed-point sets F_{1,j} ⊇ F_{2,j} ⊇ ... ⊇ F_{j-1,j} ⊆ [n_j], each
  //! containing n_j.  The last element of class i plus the s-th element of
  //! class j is the (min F_{i,j} ∩ [s, n_j])-th element of class j.
  struct Complexity2Spec {
    std::vector<std::size_t>                                     composition;
    std::map<std::size_t, std::vector<std::vector<std::size_t>>> chains;

    std::size_t n() const noexcept;

    friend bool operator==(Complexity2Spec const&, Complexity2Spec const&)
        = default;
  };

  //! Sorts and deduplicates every fixed-point set.
  Complexity2Spec canonical(Complexity2Spec spec);

  //! Throws DomainError describing the first broken constraint.
  void check_spec(Complexity2Spec const& spec);

  Monoid build_complexity2(Complexity2Spec const& spec);

  //! Reads the spec back off a complexity-2 monoid; build_complexity2 of the
  //! result reproduces the input exactly when the input is in the family.
  Complexity2Spec complexity2_spec_of(Monoid const& t);

  inline constexpr std::size_t complexity2_guard = 10;

  //! Every complexity-2 monoid on n non-zero elements, one per spec.
  std::vector<Monoid> enumerate_complexity2(std::size_t n,
                                            bool        allow_large = false);

  //! Carrier {1, ..., n - k} u {x_1, ..., x_k} with
  //! x_j = indices[j - 1] + n^-(k + 1 - j), sorted.
  std::vector<Rational> lower_bound_values(std::size_t                     n,
                                           std::size_t                     k,
                                           std::vector<std::size_t> const& indices);

  //! One member per non-decreasing k-tuple of indices from [n - k - 1], or
  //! just the member for `indices` when given.  Each has complexity n - k.
  std::vector<Monoid>
  lower_bound_family(std::size_t                                    n,
                     std::size_t                                    k,
                     std::optional<std::vector<std::size_t>> const& indices
                     = std::nullopt);

  inline constexpr std::size_t counterexample_guard = 6;

  //! Carrier values of R_m: R_2 = {1, 2} and R_{m+1} = R_m together with
  //! 2 max(R_m) + 1 + r for every r in {0} u R_m.
  std::vector<Rational> counterexample_values(std::size_t m,
                                              bool        allow_large = false);

  //! R_m under sup-addition: complexity m, longest progression 2.
  Monoid counterexample_family(std::size_t m, bool allow_large = false);

}  // namespace distmon

#endif  // DISTMON_BUILDERS_HPP_
