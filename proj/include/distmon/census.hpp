// Exhaustive enumeration of distance magmas and monoids by pruned
// backtracking over the upper triangle of the addition table.

#ifndef DISTMON_CENSUS_HPP_
#define DISTMON_CENSUS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "distmon/formulas.hpp"
#include "distmon/table.hpp"

namespace distmon {

  inline constexpr std::size_t census_monoid_guard = 8;
  inline constexpr std::size_t census_magma_guard  = 7;

  struct SearchConfig {
    std::size_t n = 1;
    //! Enumerate every magma (no associativity pruning) and count both.
    bool want_magmas = false;
    //! Keep only monoids of this Archimedean complexity.
    std::optional<std::size_t> arch_filter;
    //! Collect the counted monoids in visit order.
    bool        emit = false;
    std::size_t job_count = 1;
    //! Number of leading cells fixed per work unit; 0 picks a default when
    //! job_count > 1 and runs a single unit otherwise.
    std::size_t prefix_depth = 0;
    //! Lifts the desk-scale guards (as does DISTMON_SCALE_OVERRIDE=1).
    bool allow_large = false;
  };

  struct CensusResult {
    std::size_t n = 0;
    //! Present only when the search ran in magma mode.
    std::optional<BigCount> magma_count;
    BigCount                monoid_count = 0;
    //! Complexity k -> number of monoids; every k in 1..n is present unless
    //! an arch filter was given, in which case only that k is.
    std::map<std::size_t, BigCount> by_arch;
    std::vector<AdditionTable>      emitted;

    friend bool operator==(CensusResult const&, CensusResult const&) = default;
  };

  //! Values of the first cells (1,1), (1,2), ... of a search subtree.
  using SearchPrefix = std::vector<std::uint8_t>;

  //! Number of cells in the upper triangle of the non-zero block.
  constexpr std::size_t free_cells(std::size_t n) noexcept {
    return n * (n + 1) / 2;
  }

  //! Visits every magma once in lexicographic order of the upper triangle.
  CensusResult enumerate(SearchConfig const& config);

  //! All admissible assignments of the first prefix_depth cells, in
  //! lexicographic order.  Each is the root of an independent subtree.
  std::vector<SearchPrefix> partition_work(SearchConfig const& config);

  //! Runs only the subtree under `prefix`; summing over partition_work
  //! reproduces enumerate.
  CensusResult enumerate_subtree(SearchConfig const& config,
                                 SearchPrefix const& prefix);

  //! rows[n - 1][k - 1] = DM(n, k) for 1 <= k <= n <= n_max.
  std::vector<std::vector<BigCount>> dm_table(std::size_t n_max,
                                              std::size_t job_count = 1,
                                              bool        allow_large = false);

}  // namespace distmon

#endif  // DISTMON_CENSUS_HPP_
