// Reference values for the magma census.
//
// Distance magmas with n non-zero elements are in bijection with Magog
// triangles of order n, which are counted by the Robbins numbers
//   A(n) = prod_{k=0}^{n-1} (3k + 1)! / (n + k)!
// (OEIS A005130, the number of n x n alternating sign matrices).  The
// values below were taken from OEIS A005130 and re-derived from the product
// formula above; test-robbins.cpp recomputes them from the formula.

#ifndef DISTMON_ROBBINS_HPP_
#define DISTMON_ROBBINS_HPP_

#include <array>
#include <cstdint>

namespace distmon {

  // robbins_numbers[n] = A(n) for n = 0..11.
  inline constexpr std::array<std::uint64_t, 12> robbins_numbers = {
      1,       1,        2,         7,          42,           429,
      7436,    218348,   10850216,  911835460,  129534272700,
      31095744852375};

}  // namespace distmon

#endif  // DISTMON_ROBBINS_HPP_
