// Archimedean analysis of finite distance monoids: complexity, class
// decomposition, idempotents and arithmetic progressions of multiples.

#ifndef DISTMON_ARCH_HPP_
#define DISTMON_ARCH_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "distmon/table.hpp"

namespace distmon {

  //! Sizes of the Archimedean classes in rank order.
  struct ArchDecomposition {
    struct Block {
      element_type first;
      element_type last;

      std::size_t size() const noexcept {
        return last - first + 1;
      }
      friend bool operator==(Block const&, Block const&) = default;
    };

    std::vector<std::size_t> sizes;

    std::vector<Block> boundaries() const;

    //! 1-based index of the class containing non-zero element e.
    std::size_t class_of(element_type e) const;

    friend bool operator==(ArchDecomposition const&, ArchDecomposition const&)
        = default;
  };

  struct ApProfile {
    //! per_element[i - 1] is the number of distinct values among
    //! e_i, 2e_i, 3e_i, ... for i = 1..n.
    std::vector<std::size_t> per_element;
    std::size_t              longest = 0;
  };

  inline constexpr std::size_t default_naive_limit = 6;

  //! Least m >= 1 such that r + s = s whenever s is a sum of m elements
  //! each >= r.  Computed on reachable-sum bitsets, polynomial in n.
  std::size_t arch_complexity(Monoid const& t);
  std::size_t arch_complexity(AdditionTable const& t);

  //! Whether the complexity-m absorption condition holds.
  bool absorbs_at(Monoid const& t, std::size_t m);

  //! Direct transcription of the definition over all non-decreasing tuples
  //! (r_0, ..., r_m).  Throws ScaleGuardError if n > max_n.
  std::size_t arch_complexity_naive(Monoid const& t,
                                    std::size_t   max_n = default_naive_limit);
  std::size_t arch_complexity_naive(AdditionTable const& t,
                                    std::size_t max_n = default_naive_limit);

  //! Non-zero idempotents in increasing order.  Valid on magmas.
  std::vector<element_type> idempotents(AdditionTable const& t);

  //! Archimedean classes via iterated multiples of the least remaining
  //! element, cross-checked against splitting after each idempotent.
  ArchDecomposition decompose(Monoid const& t);
  ArchDecomposition decompose(AdditionTable const& t);

  //! The class {0} u S_c (c is 1-based) re-ranked to 0..|S_c|.
  Monoid class_submonoid(Monoid const& t, std::size_t class_index);
  Monoid class_submonoid(AdditionTable const& t, std::size_t class_index);

  ApProfile ap_profile(Monoid const& t);
  ApProfile ap_profile(AdditionTable const& t);

  //! The least element c of some class such that c < 2c < ... < length*c and
  //! length*c is the maximum of c's class.
  std::optional<element_type> progression_witness(Monoid const& t,
                                                  std::size_t   length);

}  // namespace distmon

#endif  // DISTMON_ARCH_HPP_
