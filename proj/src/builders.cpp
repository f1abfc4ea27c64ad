#include "distmon/builders.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <set>
#include <stdexcept>

#include "distmon/arch.hpp"
#include "distmon/formulas.hpp"

namespace distmon {

  namespace {
    std::string set_text(std::vector<std::size_t> const& s) {
      std::string out = "{";
      for (auto x : s) {
        out += (out.size() > 1 ? "," : "") + std::to_string(x);
      }
      return out + "}";
    }

    // Least f in the sorted set with f >= s.
    std::size_t ceiling_in(std::vector<std::size_t> const& sorted,
                           std::size_t                     s) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), s);
      // check_spec guarantees n_j is present, so it is never end().
      return *it;
    }

    bool allowed(bool allow_large) {
      return allow_large || scale_override_from_env();
    }
  }  // namespace

  Rational parse_rational(std::string const& text) {
    static std::regex const pattern(R"(\s*(-?[0-9]+)(?:/([0-9]+))?\s*)");
    std::smatch             m;
    if (!std::regex_match(text, m, pattern)) {
      throw ParseError("not a rational number: '" + text + "'");
    }
    boost::multiprecision::cpp_int num(m[1].str());
    boost::multiprecision::cpp_int den(m[2].matched ? m[2].str() : "1");
    if (den == 0) {
      throw ParseError("zero denominator in '" + text + "'");
    }
    return Rational(num, den);
  }

  SupBuild sup_monoid(std::span<Rational const> values) {
    if (values.empty()) {
      throw DomainError("sup-addition needs at least one non-zero value");
    }
    if (values.size() > AdditionTable::max_order) {
      throw DomainError("too many values for an addition table");
    }
    if (values.front() <= 0) {
      throw DomainError("carrier values must be positive");
    }
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (values[i] <= values[i - 1]) {
        throw DomainError("carrier values must be strictly increasing");
      }
    }
    std::vector<Rational> carrier{Rational(0)};
    carrier.insert(carrier.end(), values.begin(), values.end());
    std::size_t const n     = values.size();
    auto              table = AdditionTable::from_function(
        n, [&](element_type i, element_type j) -> element_type {
          Rational sum = carrier[i] + carrier[j];
          auto     it  = std::upper_bound(carrier.begin(), carrier.end(), sum);
          return static_cast<element_type>(it - carrier.begin()) - 1;
        });
    bool monoid = validate(table, 0).is_monoid;
    return {std::move(table), monoid};
  }

  std::size_t Complexity2Spec::n() const noexcept {
    return std::accumulate(composition.begin(), composition.end(),
                           std::size_t{0});
  }

  Complexity2Spec canonical(Complexity2Spec spec) {
    for (auto& [j, sets] : spec.chains) {
      for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
      }
    }
    return spec;
  }

  void check_spec(Complexity2Spec const& spec) {
    auto const& parts = spec.composition;
    if (parts.empty()) {
      throw DomainError("composition is empty");
    }
    if (std::find(parts.begin(), parts.end(), 0) != parts.end()) {
      throw DomainError("composition parts must be positive");
    }
    std::size_t const n = spec.n();
    std::size_t const k = parts.size();
    if (n < 2 || k > n - 1) {
      throw DomainError(
          "a complexity-2 monoid needs a class with at least two elements");
    }
    if (n > AdditionTable::max_order) {
      throw DomainError("composition too large for an addition table");
    }
    for (auto const& [j, sets] : spec.chains) {
      if (j < 2 || j > k) {
        throw DomainError("chains given for class " + std::to_string(j)
                          + ", expected classes 2.." + std::to_string(k));
      }
    }
    for (std::size_t j = 2; j <= k; ++j) {
      auto it = spec.chains.find(j);
      if (it == spec.chains.end()) {
        throw DomainError("missing chain for class " + std::to_string(j));
      }
      auto const& sets = it->second;
      if (sets.size() != j - 1) {
        throw DomainError("class " + std::to_string(j) + " needs "
                          + std::to_string(j - 1) + " fixed-point sets, got "
                          + std::to_string(sets.size()));
      }
      std::size_t const size = parts[j - 1];
      for (std::size_t i = 0; i < sets.size(); ++i) {
        auto const& s = sets[i];
        if (!std::is_sorted(s.begin(), s.end())
            || std::adjacent_find(s.begin(), s.end()) != s.end()) {
          throw DomainError("fixed-point sets must be sorted and distinct");
        }
        if (s.empty() || s.front() < 1 || s.back() != size) {
          throw DomainError("fixed-point set " + set_text(s) + " of class "
                            + std::to_string(j) + " must lie in [1,"
                            + std::to_string(size) + "] and contain "
                            + std::to_string(size));
        }
        if (i > 0
            && !std::includes(sets[i - 1].begin(), sets[i - 1].end(),
                              s.begin(), s.end())) {
          throw DomainError("fixed-point sets of class " + std::to_string(j)
                            + " are not nested: " + set_text(sets[i - 1])
                            + " does not contain " + set_text(s));
        }
      }
    }
  }

  Monoid build_complexity2(Complexity2Spec const& spec) {
    check_spec(spec);
    auto const& parts = spec.composition;
    std::size_t const k = parts.size();

    std::vector<std::size_t> class_of(1, 0), local(1, 0), offset(k + 1, 0);
    for (std::size_t c = 1; c <= k; ++c) {
      offset[c] = class_of.size() - 1;
      for (std::size_t s = 1; s <= parts[c - 1]; ++s) {
        class_of.push_back(c);
        local.push_back(s);
      }
    }

    auto table = AdditionTable::from_function(
        spec.n(), [&](element_type x, element_type y) -> element_type {
          std::size_t ci = class_of[x], cj = class_of[y];
          if (ci == cj) {
            return offset[ci] + parts[ci - 1];
          }
          if (ci > cj) {
            std::swap(ci, cj);
            std::swap(x, y);
          }
          auto const& fixed = spec.chains.at(cj)[ci - 1];
          return offset[cj] + ceiling_in(fixed, local[y]);
        });

    Monoid m(std::move(table));
    if (arch_complexity(m) != 2) {
      throw std::logic_error("complexity-2 builder produced another complexity");
    }
    return m;
  }

  Complexity2Spec complexity2_spec_of(Monoid const& t) {
    if (t.n() < 2 || arch_complexity(t) != 2) {
      throw DomainError("monoid does not have Archimedean complexity 2");
    }
    Complexity2Spec spec;
    spec.composition  = decompose(t).sizes;
    auto const blocks = decompose(t).boundaries();
    for (std::size_t j = 2; j <= blocks.size(); ++j) {
      auto const& bj = blocks[j - 1];
      auto&       sets = spec.chains[j];
      for (std::size_t i = 1; i < j; ++i) {
        std::vector<std::size_t> fixed;
        for (std::size_t s = 1; s <= bj.size(); ++s) {
          element_type sum = t(blocks[i - 1].last, bj.first + s - 1);
          if (sum == bj.first + s - 1) {
            fixed.push_back(s);
          }
        }
        sets.push_back(std::move(fixed));
      }
    }
    return spec;
  }

  std::vector<Monoid> enumerate_complexity2(std::size_t n, bool allow_large) {
    if (n < 2) {
      throw DomainError("complexity-2 monoids need n >= 2");
    }
    if (n > complexity2_guard && !allowed(allow_large)) {
      throw ScaleGuardError("complexity-2 enumeration is limited to n <= "
                            + std::to_string(complexity2_guard));
    }
    std::vector<Monoid> out;
    for (auto const& parts : compositions(n)) {
      std::size_t const k = parts.size();
      if (k == n) {
        continue;
      }
      // Element s < n_j of class j belongs to F_{1,j}, ..., F_{d,j} where
      // d = depth[j][s] ranges over 0..j-1.
      std::vector<std::vector<std::size_t>> depth(k + 1);
      for (std::size_t j = 2; j <= k; ++j) {
        depth[j].assign(parts[j - 1] - 1, 0);
      }
      while (true) {
        Complexity2Spec spec;
        spec.composition = parts;
        for (std::size_t j = 2; j <= k; ++j) {
          auto& sets = spec.chains[j];
          for (std::size_t i = 1; i < j; ++i) {
            std::vector<std::size_t> fixed;
            for (std::size_t s = 1; s < parts[j - 1]; ++s) {
              if (depth[j][s - 1] >= i) {
                fixed.push_back(s);
              }
            }
            fixed.push_back(parts[j - 1]);
            sets.push_back(std::move(fixed));
          }
        }
        out.push_back(build_complexity2(spec));

        // Mixed-radix increment, class 2 first.
        std::size_t j = 2;
        for (; j <= k; ++j) {
          auto& d = depth[j];
          std::size_t s = 0;
          for (; s < d.size(); ++s) {
            if (++d[s] < j) {
              break;
            }
            d[s] = 0;
          }
          if (s < d.size()) {
            break;
          }
        }
        if (j > k) {
          break;
        }
      }
    }
    std::set<AdditionTable> distinct;
    for (auto const& m : out) {
      distinct.insert(m.table());
    }
    if (distinct.size() != out.size()) {
      throw std::logic_error("two complexity-2 specs built the same table");
    }
    return out;
  }

  std::vector<Rational> lower_bound_values(std::size_t                     n,
                                           std::size_t                     k,
                                           std::vector<std::size_t> const& indices) {
    if (k < 1 || n < k + 2) {
      throw DomainError("lower-bound family needs k >= 1 and n >= k + 2");
    }
    if (indices.size() != k) {
      throw DomainError("expected " + std::to_string(k) + " indices");
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (indices[j] < 1 || indices[j] > n - k - 1
          || (j > 0 && indices[j] < indices[j - 1])) {
        throw DomainError("indices must be non-decreasing in [1, "
                          + std::to_string(n - k - 1) + "]");
      }
    }
    std::vector<Rational> values;
    for (std::size_t v = 1; v <= n - k; ++v) {
      values.emplace_back(v);
    }
    for (std::size_t j = 1; j <= k; ++j) {
      boost::multiprecision::cpp_int den
          = boost::multiprecision::pow(boost::multiprecision::cpp_int(n),
                                       static_cast<unsigned>(k + 1 - j));
      values.push_back(Rational(indices[j - 1]) + Rational(1, den));
    }
    std::sort(values.begin(), values.end());
    return values;
  }

  namespace {
    Monoid lower_bound_member(std::size_t                     n,
                              std::size_t                     k,
                              std::vector<std::size_t> const& indices) {
      auto values = lower_bound_values(n, k, indices);
      auto built  = sup_monoid(values);
      if (!built.is_monoid) {
        throw std::logic_error("lower-bound member is not associative");
      }
      // Integer shortcut: a + b = min(floor(a + b), n - k) on every pair.
      std::vector<Rational> carrier{Rational(0)};
      carrier.insert(carrier.end(), values.begin(), values.end());
      for (element_type i = 1; i <= n; ++i) {
        for (element_type j = i; j <= n; ++j) {
          Rational sum = carrier[i] + carrier[j];
          boost::multiprecision::cpp_int fl
              = numerator(sum) / denominator(sum);
          Rational expected(std::min(fl, boost::multiprecision::cpp_int(n - k)));
          if (carrier[built.table(i, j)] != expected) {
            throw std::logic_error(
                "sup-addition disagrees with the floor shortcut");
          }
        }
      }
      Monoid m = Monoid::unchecked(std::move(built.table));
      if (arch_complexity(m) != n - k) {
        throw std::logic_error("lower-bound member has the wrong complexity");
      }
      return m;
    }
  }  // namespace

  std::vector<Monoid>
  lower_bound_family(std::size_t                                    n,
                     std::size_t                                    k,
                     std::optional<std::vector<std::size_t>> const& indices) {
    if (k < 1 || n < k + 2) {
      throw DomainError("lower-bound family needs k >= 1 and n >= k + 2");
    }
    if (indices) {
      return {lower_bound_member(n, k, *indices)};
    }
    std::vector<Monoid>      out;
    std::vector<std::size_t> tuple(k, 1);
    std::size_t const        top = n - k - 1;
    while (true) {
      out.push_back(lower_bound_member(n, k, tuple));
      std::size_t pos = k;
      while (pos > 0 && tuple[pos - 1] == top) {
        --pos;
      }
      if (pos == 0) {
        break;
      }
      std::size_t v = tuple[pos - 1] + 1;
      for (std::size_t q = pos - 1; q < k; ++q) {
        tuple[q] = v;
      }
    }
    std::set<AdditionTable> distinct;
    for (auto const& m : out) {
      distinct.insert(m.table());
    }
    if (distinct.size() != out.size()) {
      throw std::logic_error("lower-bound family members coincide");
    }
    return out;
  }

  std::vector<Rational> counterexample_values(std::size_t m, bool allow_large) {
    if (m < 2) {
      throw DomainError("counterexample family starts at m = 2");
    }
    if (m > counterexample_guard && !allowed(allow_large)) {
      throw ScaleGuardError("counterexample family is limited to m <= "
                            + std::to_string(counterexample_guard));
    }
    std::vector<Rational> values{Rational(1), Rational(2)};
    for (std::size_t step = 2; step < m; ++step) {
      // Validate every intermediate carrier as well as the last one.
      if (!sup_monoid(values).is_monoid) {
        throw std::logic_error("counterexample carrier R_"
                               + std::to_string(step) + " is not associative");
      }
      Rational const base = 2 * values.back() + 1;
      values.push_back(base);
      std::size_t const size = values.size() - 1;
      for (std::size_t i = 0; i < size; ++i) {
        values.push_back(base + values[i]);
      }
    }
    return values;
  }

  Monoid counterexample_family(std::size_t m, bool allow_large) {
    auto built = sup_monoid(counterexample_values(m, allow_large));
    if (!built.is_monoid) {
      throw std::logic_error("counterexample carrier R_" + std::to_string(m)
                             + " is not associative");
    }
    return Monoid::unchecked(std::move(built.table));
  }

}  // namespace distmon
