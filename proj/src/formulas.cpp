#include "distmon/formulas.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "distmon/errors.hpp"

namespace distmon {

  namespace {
    // Largest explicit chain enumeration attempted by count_A_chains.
    constexpr std::uint64_t chain_enumeration_limit = 100'000'000;

    void compositions_lex(std::size_t                            rest,
                          std::vector<std::size_t>&              prefix,
                          std::vector<std::vector<std::size_t>>& out) {
      if (rest == 0) {
        out.push_back(prefix);
        return;
      }
      for (std::size_t part = 1; part <= rest; ++part) {
        prefix.push_back(part);
        compositions_lex(rest - part, prefix, out);
        prefix.pop_back();
      }
    }

    std::uint64_t count_chains_from(std::uint64_t cur,
                                    std::uint64_t full,
                                    std::size_t   remaining) {
      if (remaining == 0) {
        return 1;
      }
      std::uint64_t const free  = full & ~cur;
      std::uint64_t       total = 0;
      // Every superset of cur inside full: cur | t for each subset t of free.
      for (std::uint64_t t = 0;; t = (t - free) & free) {
        total += count_chains_from(cur | t, full, remaining - 1);
        if (t == free) {
          break;
        }
      }
      return total;
    }
  }  // namespace

  std::string to_decimal(BigCount const& x) {
    return x.str();
  }

  BigCount parse_decimal(std::string const& s) {
    if (s.empty()
        || !std::all_of(s.begin(), s.end(), [](char c) {
             return c >= '0' && c <= '9';
           })) {
      throw ParseError("not a decimal count: '" + s + "'");
    }
    return BigCount(s);
  }

  std::vector<std::vector<std::size_t>> compositions(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t>              prefix;
    compositions_lex(n, prefix, out);
    // Reversing each member of a lex-ordered list of all compositions yields
    // all compositions in colex order.
    for (auto& c : out) {
      std::reverse(c.begin(), c.end());
    }
    return out;
  }

  BigCount dm_n_2(std::size_t n) {
    if (n < 2) {
      throw DomainError("DM(n, 2) is defined for n >= 2");
    }
    // level[s]: sum over compositions of s into k parts of prod j^(n_j - 1).
    std::vector<BigCount> level(n + 1, 0);
    level[0]       = 1;
    BigCount total = 0;
    for (std::size_t k = 1; k < n; ++k) {
      std::vector<BigCount> next(n + 1, 0);
      for (std::size_t s = 1; s <= n; ++s) {
        BigCount weight = 1;
        for (std::size_t t = 1; t <= s; ++t) {
          next[s] += level[s - t] * weight;
          weight *= k;
        }
      }
      level = std::move(next);
      total += level[n];
    }
    return total;
  }

  BigCount bell(std::size_t n) {
    std::vector<BigCount> row{1};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<BigCount> next{row.back()};
      next.reserve(row.size() + 1);
      for (auto const& x : row) {
        next.push_back(next.back() + x);
      }
      row = std::move(next);
    }
    return row.front();
  }

  BigCount stirling2(std::size_t n, std::size_t k) {
    if (k > n) {
      return 0;
    }
    // row[j] = S(i, j)
    std::vector<BigCount> row(k + 1, 0);
    row[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = std::min(i, k); j >= 1; --j) {
        row[j] = BigCount(j) * row[j] + row[j - 1];
      }
      row[0] = 0;
    }
    return row[k];
  }

  BigCount binomial(std::size_t n, std::size_t k) {
    if (k > n) {
      return 0;
    }
    k = std::min(k, n - k);
    BigCount result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      result *= n - k + i;
      result /= i;
    }
    return result;
  }

  BigCount dm_near_top(std::size_t n, std::size_t k) {
    auto delta3 = [](std::size_t m) { return m % 3 == 0 ? 1 : 0; };
    if (k == 0 && n >= 1) {
      return 1;
    }
    if (k == 1 && n >= 3) {
      return BigCount(2 * n - 2);
    }
    if (k == 2 && n >= 9) {
      BigCount nn(n);
      return 2 * nn * nn - 2 * nn - 8 + delta3(n) + delta3(n + 1);
    }
    throw DomainError("no closed form for DM(n, n - k) at n = "
                      + std::to_string(n) + ", k = " + std::to_string(k));
  }

  BigCount dm_lower_bound(std::size_t n, std::size_t k) {
    if (k < 1 || n < k + 2) {
      throw DomainError("lower bound needs k >= 1 and n >= k + 2");
    }
    return binomial(n - 2, k);
  }

  CeilingMap
  CeilingMap::from_fixed_points(std::size_t                     n,
                                std::vector<std::size_t> const& fixed_points) {
    std::vector<bool> fixed(n + 1, false);
    for (auto f : fixed_points) {
      if (f < 1 || f > n) {
        throw DomainError("fixed point " + std::to_string(f)
                          + " outside [1, " + std::to_string(n) + "]");
      }
      fixed[f] = true;
    }
    if (n == 0 || !fixed[n]) {
      throw DomainError("fixed-point set must contain n");
    }
    std::vector<std::size_t> targets(n);
    std::size_t              ceiling = n;
    for (std::size_t i = n; i >= 1; --i) {
      if (fixed[i]) {
        ceiling = i;
      }
      targets[i - 1] = ceiling;
    }
    return CeilingMap(std::move(targets));
  }

  bool CeilingMap::is_valid() const {
    std::size_t const n = _targets.size();
    for (std::size_t i = 1; i <= n; ++i) {
      std::size_t const a = _targets[i - 1];
      if (a < i || a > n) {
        return false;
      }
      for (std::size_t m = i; m <= a; ++m) {
        if (_targets[m - 1] != a) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<std::size_t> CeilingMap::fixed_points() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i <= _targets.size(); ++i) {
      if (_targets[i - 1] == i) {
        out.push_back(i);
      }
    }
    return out;
  }

  std::vector<CeilingMap> enumerate_A(std::size_t n) {
    if (n == 0) {
      throw DomainError("A(n) needs n >= 1");
    }
    if (n > 24) {
      throw ScaleGuardError("enumerate_A is limited to n <= 24");
    }
    std::vector<CeilingMap> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
      std::vector<std::size_t> fixed;
      for (std::size_t i = 1; i < n; ++i) {
        if (mask >> (i - 1) & 1) {
          fixed.push_back(i);
        }
      }
      fixed.push_back(n);
      out.push_back(CeilingMap::from_fixed_points(n, fixed));
    }
    return out;
  }

  ChainCount count_A_chains(std::size_t n, std::size_t k) {
    if (n == 0 || k == 0) {
      throw DomainError("count_A_chains needs n, k >= 1");
    }
    ChainCount result;
    result.formula = boost::multiprecision::pow(BigCount(k + 1),
                                                static_cast<unsigned>(n - 1));
    if (n <= 63 && result.formula <= chain_enumeration_limit) {
      // F_1 ⊆ ... ⊆ F_k over [n - 1]; n itself lies in every set.
      std::uint64_t full = (std::uint64_t{1} << (n - 1)) - 1;
      std::uint64_t total = 0;
      for (std::uint64_t first = 0;; first = (first + 1) & full) {
        total += count_chains_from(first, full, k - 1);
        if (first == full) {
          break;
        }
      }
      result.enumerated = BigCount(total);
      if (*result.enumerated != result.formula) {
        throw std::logic_error("chain enumeration disagrees with (k+1)^(n-1)");
      }
    }
    return result;
  }

}  // namespace distmon
