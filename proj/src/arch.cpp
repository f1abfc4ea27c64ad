#include "distmon/arch.hpp"

#include <bitset>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

namespace distmon {

  namespace {
    using ElementSet = std::bitset<AdditionTable::max_order + 1>;

    void require_nonzero(AdditionTable const& t) {
      if (t.n() == 0) {
        throw DomainError(
            "Archimedean analysis needs at least one non-zero element");
      }
    }

    // Per-monoid precomputation shared by every m-step.
    class ReachEngine {
     public:
      explicit ReachEngine(Monoid const& t)
          : _n(t.n()),
            _sums((_n + 1) * (_n + 2)),
            _absorbed(_n + 1),
            _reach(_n + 1) {
        // _sums[u][r] = { u + v : v >= r }
        for (element_type u = 0; u <= _n; ++u) {
          for (element_type r = _n + 1; r-- > 0;) {
            sums(u, r) = sums(u, r + 1);
            sums(u, r).set(t(u, r));
          }
        }
        for (element_type r = 1; r <= _n; ++r) {
          for (element_type s = 0; s <= _n; ++s) {
            if (t(r, s) == s) {
              _absorbed[r].set(s);
            }
          }
          for (element_type e = r; e <= _n; ++e) {
            _reach[r].set(e);
          }
        }
      }

      bool condition_holds() const {
        for (element_type r = 1; r <= _n; ++r) {
          if ((_reach[r] & ~_absorbed[r]).any()) {
            return false;
          }
        }
        return true;
      }

      // reach(r, m) -> reach(r, m + 1); returns false if nothing changed.
      bool step() {
        bool changed = false;
        for (element_type r = 1; r <= _n; ++r) {
          ElementSet next;
          for (element_type u = r; u <= _n; ++u) {
            if (_reach[r].test(u)) {
              next |= sums(u, r);
            }
          }
          changed = changed || next != _reach[r];
          _reach[r] = next;
        }
        return changed;
      }

     private:
      ElementSet& sums(element_type u, element_type r) {
        return _sums[u * (_n + 2) + r];
      }

      std::size_t             _n;
      std::vector<ElementSet> _sums;
      std::vector<ElementSet> _absorbed;
      std::vector<ElementSet> _reach;
    };

    std::size_t arch_from_reach(Monoid const& t) {
      ReachEngine engine(t);
      for (std::size_t m = 1; m <= t.n(); ++m) {
        if (engine.condition_holds()) {
#ifndef NDEBUG
          ReachEngine check = engine;
          check.step();
          assert(check.condition_holds());
#endif
          return m;
        }
        engine.step();
      }
      throw std::logic_error("Archimedean complexity exceeds n");
    }

    // Every non-decreasing tuple over 0..n of the given length, in lex order.
    template <typename Func>
    bool all_nondecreasing(std::size_t n, std::size_t length, Func&& f) {
      std::vector<element_type> tuple(length, 0);
      while (true) {
        if (!f(tuple)) {
          return false;
        }
        std::size_t pos = length;
        while (pos > 0 && tuple[pos - 1] == n) {
          --pos;
        }
        if (pos == 0) {
          return true;
        }
        element_type v = tuple[pos - 1] + 1;
        for (std::size_t q = pos - 1; q < length; ++q) {
          tuple[q] = v;
        }
      }
    }
  }  // namespace

  std::vector<ArchDecomposition::Block> ArchDecomposition::boundaries() const {
    std::vector<Block> out;
    element_type       first = 1;
    for (auto s : sizes) {
      out.push_back({first, first + s - 1});
      first += s;
    }
    return out;
  }

  std::size_t ArchDecomposition::class_of(element_type e) const {
    element_type last = 0;
    for (std::size_t c = 0; c < sizes.size(); ++c) {
      last += sizes[c];
      if (e >= 1 && e <= last) {
        return c + 1;
      }
    }
    throw DomainError("element " + std::to_string(e) + " is in no class");
  }

  std::size_t arch_complexity(Monoid const& t) {
    require_nonzero(t.table());
    return arch_from_reach(t);
  }

  std::size_t arch_complexity(AdditionTable const& t) {
    return arch_complexity(Monoid(t));
  }

  bool absorbs_at(Monoid const& t, std::size_t m) {
    require_nonzero(t.table());
    if (m == 0) {
      throw DomainError("absorption condition needs m >= 1");
    }
    ReachEngine engine(t);
    for (std::size_t step = 1; step < m; ++step) {
      if (!engine.step()) {
        break;
      }
    }
    return engine.condition_holds();
  }

  std::size_t arch_complexity_naive(Monoid const& t, std::size_t max_n) {
    require_nonzero(t.table());
    std::size_t const n = t.n();
    if (n > max_n) {
      throw ScaleGuardError("naive complexity oracle is limited to n <= "
                            + std::to_string(max_n));
    }
    for (std::size_t m = 1; m <= n; ++m) {
      bool ok = all_nondecreasing(n, m + 1, [&](auto const& r) {
        element_type tail = r[1];
        for (std::size_t q = 2; q <= m; ++q) {
          tail = t(tail, r[q]);
        }
        return t(r[0], tail) == tail;
      });
      if (ok) {
        return m;
      }
    }
    throw std::logic_error("naive complexity exceeds n");
  }

  std::size_t arch_complexity_naive(AdditionTable const& t, std::size_t max_n) {
    return arch_complexity_naive(Monoid(t), max_n);
  }

  std::vector<element_type> idempotents(AdditionTable const& t) {
    std::vector<element_type> out;
    for (element_type i = 1; i <= t.n(); ++i) {
      if (t(i, i) == i) {
        out.push_back(i);
      }
    }
    return out;
  }

  ArchDecomposition decompose(Monoid const& t) {
    std::size_t const n = t.n();
    ArchDecomposition result;
    // Constructive route: the multiples of the least remaining element
    // stabilise at the top of its class.
    for (element_type first = 1; first <= n;) {
      element_type top = multiple(t, first, n + 1);
      result.sizes.push_back(top - first + 1);
      first = top + 1;
    }

    ArchDecomposition split;
    element_type      start = 1;
    for (auto e : idempotents(t.table())) {
      split.sizes.push_back(e - start + 1);
      start = e + 1;
    }
    if (start != n + 1 || split != result) {
      throw std::logic_error(
          "class decomposition disagrees with idempotent splitting");
    }
    return result;
  }

  ArchDecomposition decompose(AdditionTable const& t) {
    return decompose(Monoid(t));
  }

  Monoid class_submonoid(Monoid const& t, std::size_t class_index) {
    auto blocks = decompose(t).boundaries();
    if (class_index == 0 || class_index > blocks.size()) {
      throw DomainError("class index " + std::to_string(class_index)
                        + " out of range 1.." + std::to_string(blocks.size()));
    }
    auto const   block = blocks[class_index - 1];
    element_type shift = block.first - 1;
    auto         sub   = AdditionTable::from_function(
        block.size(), [&](element_type i, element_type j) {
          element_type v = t(i + shift, j + shift);
          if (v < block.first || v > block.last) {
            throw std::logic_error("Archimedean class is not closed");
          }
          return v - shift;
        });
    return Monoid::unchecked(std::move(sub));
  }

  Monoid class_submonoid(AdditionTable const& t, std::size_t class_index) {
    return class_submonoid(Monoid(t), class_index);
  }

  ApProfile ap_profile(Monoid const& t) {
    ApProfile p;
    for (element_type i = 1; i <= t.n(); ++i) {
      std::size_t  count = 1;
      element_type acc   = i;
      while (true) {
        element_type next = t(acc, i);
        if (next == acc) {
          break;
        }
        acc = next;
        ++count;
      }
      p.per_element.push_back(count);
      p.longest = std::max(p.longest, count);
    }
    return p;
  }

  ApProfile ap_profile(AdditionTable const& t) {
    return ap_profile(Monoid(t));
  }

  std::optional<element_type> progression_witness(Monoid const& t,
                                                  std::size_t   length) {
    if (length == 0) {
      throw DomainError("progression length must be positive");
    }
    auto profile = ap_profile(t);
    for (auto const& block : decompose(t).boundaries()) {
      if (profile.per_element[block.first - 1] >= length
          && multiple(t, block.first, length) == block.last) {
        return block.first;
      }
    }
    return std::nullopt;
  }

}  // namespace distmon
