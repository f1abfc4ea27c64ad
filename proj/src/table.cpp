#include "distmon/table.hpp"

#include <cassert>
#include <cstdlib>
#include <string>
#include <utility>

namespace distmon {

  bool scale_override_from_env() {
    char const* v = std::getenv("DISTMON_SCALE_OVERRIDE");
    return v != nullptr && std::string_view(v) == "1";
  }

  AdditionTable::AdditionTable(std::size_t n)
      : _n(n), _cells((n + 1) * (n + 1), 0) {
    if (n > max_order) {
      throw DomainError("table order " + std::to_string(n)
                        + " exceeds the supported maximum "
                        + std::to_string(max_order));
    }
    for (std::size_t i = 0; i <= n; ++i) {
      _cells[i] = static_cast<std::uint8_t>(i);
      _cells[i * (n + 1)] = static_cast<std::uint8_t>(i);
    }
  }

  void AdditionTable::set_symmetric(element_type i,
                                    element_type j,
                                    element_type value) {
    if (value > _n) {
      throw ParseError("cell (" + std::to_string(i) + "," + std::to_string(j)
                       + ") = " + std::to_string(value) + " is out of range");
    }
    _cells[i * (_n + 1) + j] = static_cast<std::uint8_t>(value);
    _cells[j * (_n + 1) + i] = static_cast<std::uint8_t>(value);
  }

  AdditionTable AdditionTable::from_entries(
      std::size_t                                   n,
      std::vector<std::vector<element_type>> const& entries) {
    if (n > max_order) {
      throw ParseError("n = " + std::to_string(n) + " is too large");
    }
    if (entries.size() != n + 1) {
      throw ParseError("expected " + std::to_string(n + 1) + " rows, found "
                       + std::to_string(entries.size()));
    }
    AdditionTable t(n);
    for (std::size_t i = 0; i <= n; ++i) {
      if (entries[i].size() != n + 1) {
        throw ParseError("row " + std::to_string(i) + " has "
                         + std::to_string(entries[i].size())
                         + " cells, expected " + std::to_string(n + 1));
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (entries[i][j] > n) {
          throw ParseError("cell (" + std::to_string(i) + ","
                           + std::to_string(j) + ") = "
                           + std::to_string(entries[i][j])
                           + " is out of range 0.." + std::to_string(n));
        }
        t._cells[i * (n + 1) + j] = static_cast<std::uint8_t>(entries[i][j]);
      }
    }
    return t;
  }

  AdditionTable
  AdditionTable::from_upper_triangle(std::size_t                   n,
                                     std::span<std::uint8_t const> cells) {
    if (cells.size() != n * (n + 1) / 2) {
      throw ParseError("upper triangle of order " + std::to_string(n)
                       + " needs " + std::to_string(n * (n + 1) / 2)
                       + " cells, got " + std::to_string(cells.size()));
    }
    AdditionTable t(n);
    std::size_t   pos = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i; j <= n; ++j) {
        t.set_symmetric(i, j, cells[pos++]);
      }
    }
    return t;
  }

  element_type AdditionTable::at(element_type i, element_type j) const {
    if (i > _n || j > _n) {
      throw DomainError("index (" + std::to_string(i) + "," + std::to_string(j)
                        + ") out of range 0.." + std::to_string(_n));
    }
    return (*this)(i, j);
  }

  std::vector<std::uint8_t> AdditionTable::upper_triangle() const {
    std::vector<std::uint8_t> out;
    out.reserve(_n * (_n + 1) / 2);
    for (std::size_t i = 1; i <= _n; ++i) {
      for (std::size_t j = i; j <= _n; ++j) {
        out.push_back(_cells[i * (_n + 1) + j]);
      }
    }
    return out;
  }

  std::vector<std::vector<element_type>> AdditionTable::rows() const {
    std::vector<std::vector<element_type>> out(
        _n + 1, std::vector<element_type>(_n + 1));
    for (std::size_t i = 0; i <= _n; ++i) {
      for (std::size_t j = 0; j <= _n; ++j) {
        out[i][j] = (*this)(i, j);
      }
    }
    return out;
  }

  AdditionTable max_table(std::size_t n) {
    return AdditionTable::from_function(
        n, [](element_type i, element_type j) { return std::max(i, j); });
  }

  AdditionTable capped_naturals(std::size_t n) {
    return AdditionTable::from_function(n, [n](element_type i, element_type j) {
      return std::min(i + j, n);
    });
  }

  std::string_view axiom_name(Axiom a) noexcept {
    switch (a) {
      case Axiom::identity:
        return "identity";
      case Axiom::symmetry:
        return "symmetry";
      case Axiom::positivity:
        return "positivity";
      case Axiom::monotonicity:
        return "monotonicity";
      case Axiom::associativity:
        return "associativity";
    }
    return "unknown";
  }

  namespace {
    class ViolationSink {
     public:
      ViolationSink(ValidationReport& report, std::size_t limit)
          : _report(report), _limit(limit) {}

      void add(Axiom a, std::vector<element_type> witness) {
        if (a == Axiom::associativity) {
          _report.is_monoid = false;
        } else {
          _report.is_magma = false;
          _report.is_monoid = false;
        }
        ++_report.violation_count;
        if (_report.violations.size() < _limit) {
          _report.violations.push_back({a, std::move(witness)});
        }
      }

     private:
      ValidationReport& _report;
      std::size_t       _limit;
    };
  }  // namespace

  ValidationReport validate(AdditionTable const& t, std::size_t limit) {
    ValidationReport report;
    ViolationSink    sink(report, limit);
    std::size_t const n = t.n();

    for (element_type j = 0; j <= n; ++j) {
      if (t(0, j) != j) {
        sink.add(Axiom::identity, {0, j});
      }
      if (j != 0 && t(j, 0) != j) {
        sink.add(Axiom::identity, {j, 0});
      }
    }

    bool symmetric = true;
    for (element_type i = 0; i <= n; ++i) {
      for (element_type j = i + 1; j <= n; ++j) {
        if (t(i, j) != t(j, i)) {
          symmetric = false;
          sink.add(Axiom::symmetry, {i, j});
        }
      }
    }

    for (element_type i = 0; i <= n; ++i) {
      for (element_type j = 0; j <= n; ++j) {
        if (t(i, j) < std::max(i, j)) {
          sink.add(Axiom::positivity, {i, j});
        }
      }
    }

    for (element_type i = 0; i <= n; ++i) {
      for (element_type j = 0; j <= n; ++j) {
        bool bad = (i < n && t(i, j) > t(i + 1, j))
                   || (j < n && t(i, j) > t(i, j + 1));
        if (bad) {
          sink.add(Axiom::monotonicity, {i, j});
        }
      }
    }

    if (symmetric) {
      for (element_type i = 1; i <= n; ++i) {
        for (element_type j = i; j <= n; ++j) {
          element_type const ij = t(i, j);
          for (element_type k = j; k <= n; ++k) {
            element_type const a = t(ij, k);
            if (a != t(t(j, k), i) || a != t(t(i, k), j)) {
              sink.add(Axiom::associativity, {i, j, k});
            }
          }
        }
      }
    } else {
      for (element_type i = 1; i <= n; ++i) {
        for (element_type j = 1; j <= n; ++j) {
          for (element_type k = 1; k <= n; ++k) {
            if (t(t(i, j), k) != t(i, t(j, k))) {
              sink.add(Axiom::associativity, {i, j, k});
            }
          }
        }
      }
    }
    return report;
  }

  bool is_magma(AdditionTable const& t) {
    return validate(t, 0).is_magma;
  }

  bool is_associative(AdditionTable const& t) {
    std::size_t const n = t.n();
    for (element_type i = 1; i <= n; ++i) {
      for (element_type j = i; j <= n; ++j) {
        element_type const ij = t(i, j);
        for (element_type k = j; k <= n; ++k) {
          element_type const a = t(ij, k);
          if (a != t(t(j, k), i) || a != t(t(i, k), j)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  element_type oplus(AdditionTable const& t, element_type i, element_type j) {
    return t.at(i, j);
  }

  Monoid::Monoid(AdditionTable t) : _table(std::move(t)) {
    ValidationReport r = validate(_table, 1);
    if (!r.is_monoid) {
      Violation const& v = r.violations.front();
      std::string      w;
      for (auto x : v.witness) {
        w += (w.empty() ? "" : ",") + std::to_string(x);
      }
      throw NotAMonoid("not a distance monoid: " + std::string(axiom_name(v.axiom))
                       + " fails at (" + w + ")");
    }
  }

  Monoid Monoid::unchecked(AdditionTable t) {
    assert(validate(t, 0).is_monoid);
    return Monoid(std::move(t), unchecked_tag{});
  }

  element_type multiple(Monoid const& t, element_type i, std::size_t m) {
    if (i > t.n()) {
      throw DomainError("element " + std::to_string(i) + " out of range");
    }
    if (m == 0) {
      throw DomainError("multiple requires m >= 1");
    }
    element_type acc = i;
    for (std::size_t step = 1; step < m; ++step) {
      element_type next = t(acc, i);
      if (next == acc) {
        break;
      }
      acc = next;
    }
    return acc;
  }

  element_type multiple(AdditionTable const& t, element_type i, std::size_t m) {
    return multiple(Monoid(t), i, m);
  }

}  // namespace distmon
