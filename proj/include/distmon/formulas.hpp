// Exact counting formulas for distance monoids and the ceiling-map
// combinatorics behind the complexity-2 count.  All arithmetic is exact.

#ifndef DISTMON_FORMULAS_HPP_
#define DISTMON_FORMULAS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace distmon {

  using BigCount = boost::multiprecision::cpp_int;

  std::string to_decimal(BigCount const& x);

  //! Parses a non-negative decimal integer; throws ParseError otherwise.
  BigCount parse_decimal(std::string const& s);

  //! All compositions of n into positive parts, colexicographic in the part
  //! sequence (compare last parts first).
  std::vector<std::vector<std::size_t>> compositions(std::size_t n);

  //! Number of complexity-2 monoids on n >= 2 non-zero elements: the sum over
  //! compositions (n_1, ..., n_k) of n with k <= n - 1 of prod_j j^(n_j - 1).
  BigCount dm_n_2(std::size_t n);

  //! Bell number via the Bell triangle.
  BigCount bell(std::size_t n);

  //! Stirling number of the second kind via S(n,k) = k S(n-1,k) + S(n-1,k-1).
  BigCount stirling2(std::size_t n, std::size_t k);

  BigCount binomial(std::size_t n, std::size_t k);

  //! DM(n, n - k) for the cases with a known closed form:
  //! k = 0 (n >= 1), k = 1 (n >= 3) and k = 2 (n >= 9).
  BigCount dm_near_top(std::size_t n, std::size_t k);

  //! binomial(n - 2, k), a lower bound for DM(n, n - k); k >= 1, n >= k + 2.
  BigCount dm_lower_bound(std::size_t n, std::size_t k);

  //! A map a on [n] with a_i >= i and a_m = a_i for i <= m <= a_i.  Such a
  //! map sends each point to the least fixed point above it.
  class CeilingMap {
   public:
    //! targets[i - 1] = a_i.  No validation; see is_valid().
    explicit CeilingMap(std::vector<std::size_t> targets)
        : _targets(std::move(targets)) {}

    //! Throws DomainError unless fixed_points is a subset of [n] containing n.
    static CeilingMap from_fixed_points(std::size_t                     n,
                                        std::vector<std::size_t> const& fixed_points);

    std::size_t n() const noexcept {
      return _targets.size();
    }

    std::size_t operator()(std::size_t i) const {
      return _targets.at(i - 1);
    }

    std::vector<std::size_t> const& targets() const noexcept {
      return _targets;
    }

    //! Membership in A(n).
    bool is_valid() const;

    std::vector<std::size_t> fixed_points() const;

    friend bool operator==(CeilingMap const&, CeilingMap const&) = default;
    friend auto operator<=>(CeilingMap const&, CeilingMap const&) = default;

   private:
    std::vector<std::size_t> _targets;
  };

  //! A(n), generated from fixed-point sets F with n in F; the bits of a mask
  //! over [n - 1] select F \ {n}, in increasing mask order.
  std::vector<CeilingMap> enumerate_A(std::size_t n);

  struct ChainCount {
    BigCount formula;
    //! Explicit count of nested fixed-point sets, when at desk scale.
    std::optional<BigCount> enumerated;
  };

  //! Number of chains a^(k) <= ... <= a^(1) in A(n).  Throws std::logic_error
  //! if the explicit enumeration disagrees with (k + 1)^(n - 1).
  ChainCount count_A_chains(std::size_t n, std::size_t k);

}  // namespace distmon

#endif  // DISTMON_FORMULAS_HPP_
