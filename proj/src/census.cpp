#include "distmon/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>

#include "distmon/arch.hpp"

namespace distmon {

  namespace {
    constexpr std::uint8_t unset = 0xFF;

    struct Subtotal {
      std::uint64_t              magmas = 0;
      std::vector<std::uint64_t> by_arch;
      std::vector<AdditionTable> emitted;
    };

    // A triple a <= b <= c of non-zero elements together with its three
    // bracketings (a+b)+c, (b+c)+a and (a+c)+b.  Bracketing q has inner cell
    // inner[q] and adds third[q] to it.
    struct Triple {
      std::array<std::uint16_t, 3> inner;
      std::array<element_type, 3>  third;
    };

    class SearchEngine {
     public:
      explicit SearchEngine(SearchConfig const& config)
          : _config(config),
            _n(config.n),
            _dim(config.n + 1),
            _cells(_dim * _dim, unset),
            _position(_dim * _dim, 0),
            _triggers(free_cells(_n)),
            _watches(free_cells(_n)) {
        for (element_type i = 0; i <= _n; ++i) {
          _cells[i] = static_cast<std::uint8_t>(i);
          _cells[i * _dim] = static_cast<std::uint8_t>(i);
        }
        for (element_type i = 1; i <= _n; ++i) {
          for (element_type j = i; j <= _n; ++j) {
            _position[i * _dim + j] = _position[j * _dim + i]
                = static_cast<std::uint16_t>(_order.size());
            _order.push_back({i, j});
          }
        }
        for (element_type a = 1; a <= _n; ++a) {
          for (element_type b = a; b <= _n; ++b) {
            for (element_type c = b; c <= _n; ++c) {
              Triple t{{position(a, b), position(b, c), position(a, c)},
                       {c, a, b}};
              auto id = static_cast<std::uint32_t>(_triples.size());
              _triples.push_back(t);
              for (std::uint8_t q = 0; q < 3; ++q) {
                _triggers[t.inner[q]].push_back({id, q});
              }
            }
          }
        }
        _total.by_arch.assign(_n + 1, 0);
      }

      // Applies a prefix; returns false if it is not admissible.
      bool apply(SearchPrefix const& prefix) {
        for (std::size_t p = 0; p < prefix.size(); ++p) {
          if (prefix[p] < lower_bound(p) || prefix[p] > _n) {
            return false;
          }
          assign(p, prefix[p]);
          if (_broken_at != none && !_config.want_magmas) {
            return false;
          }
        }
        return true;
      }

      void run(std::size_t start) {
        search(start);
      }

      void collect_prefixes(std::size_t p, std::size_t depth,
                            SearchPrefix&              prefix,
                            std::vector<SearchPrefix>& out) {
        if (p == depth) {
          out.push_back(prefix);
          return;
        }
        for (std::size_t v = lower_bound(p); v <= _n; ++v) {
          std::size_t mark = assign(p, v);
          if (_broken_at == none || _config.want_magmas) {
            prefix.push_back(static_cast<std::uint8_t>(v));
            collect_prefixes(p + 1, depth, prefix, out);
            prefix.pop_back();
          }
          retract(p, mark);
        }
      }

      Subtotal take() {
        return std::move(_total);
      }

     private:
      static constexpr std::size_t none = static_cast<std::size_t>(-1);

      std::uint16_t position(element_type i, element_type j) const {
        return _position[i * _dim + j];
      }

      std::uint8_t& cell(element_type i, element_type j) {
        return _cells[i * _dim + j];
      }

      std::size_t lower_bound(std::size_t p) const {
        auto [i, j] = _order[p];
        return std::max<std::size_t>(
            {j, _cells[i * _dim + j - 1], _cells[(i - 1) * _dim + j]});
      }

      // Evaluates every determined bracketing of a triple.
      bool consistent(Triple const& t) const {
        std::uint8_t seen = unset;
        for (int q = 0; q < 3; ++q) {
          auto [i, j] = _order[t.inner[q]];
          std::uint8_t x = _cells[i * _dim + j];
          if (x == unset) {
            continue;
          }
          std::uint8_t y = _cells[x * _dim + t.third[q]];
          if (y == unset) {
            continue;
          }
          if (seen == unset) {
            seen = y;
          } else if (seen != y) {
            return false;
          }
        }
        return true;
      }

      void note_violation(std::size_t p) {
        if (_broken_at == none) {
          _broken_at = p;
        }
      }

      // Fixes cell p and runs every associativity check it enables.
      // Returns the undo mark for retract.
      std::size_t assign(std::size_t p, std::size_t value) {
        auto [i, j] = _order[p];
        cell(i, j)  = cell(j, i) = static_cast<std::uint8_t>(value);
        std::size_t mark = _undo.size();

        for (auto [id, q] : _triggers[p]) {
          Triple const& t = _triples[id];
          std::uint16_t outer = position_of_sum(value, t.third[q]);
          if (is_set(outer)) {
            if (!consistent(t)) {
              note_violation(p);
            }
          } else {
            _watches[outer].push_back(id);
            _undo.push_back(outer);
          }
        }
        for (auto id : _watches[p]) {
          if (!consistent(_triples[id])) {
            note_violation(p);
          }
        }
        return mark;
      }

      void retract(std::size_t p, std::size_t mark) {
        while (_undo.size() > mark) {
          _watches[_undo.back()].pop_back();
          _undo.pop_back();
        }
        if (_broken_at == p) {
          _broken_at = none;
        }
        auto [i, j] = _order[p];
        cell(i, j) = cell(j, i) = unset;
      }

      std::uint16_t position_of_sum(std::size_t x, element_type third) const {
        return _position[x * _dim + third];
      }

      bool is_set(std::uint16_t pos) const {
        auto [i, j] = _order[pos];
        return _cells[i * _dim + j] != unset;
      }

      void search(std::size_t p) {
        if (p == _order.size()) {
          leaf();
          return;
        }
        for (std::size_t v = lower_bound(p); v <= _n; ++v) {
          std::size_t mark = assign(p, v);
          if (_broken_at == none || _config.want_magmas) {
            search(p + 1);
          }
          retract(p, mark);
        }
      }

      void leaf() {
        ++_total.magmas;
        if (_broken_at != none) {
          return;
        }
        std::vector<std::uint8_t> upper;
        upper.reserve(_order.size());
        for (auto [i, j] : _order) {
          upper.push_back(_cells[i * _dim + j]);
        }
        auto        table = AdditionTable::from_upper_triangle(_n, upper);
        Monoid      m     = Monoid::unchecked(std::move(table));
        std::size_t k     = arch_complexity(m);
        if (_config.arch_filter && *_config.arch_filter != k) {
          return;
        }
        ++_total.by_arch[k];
        if (_config.emit) {
          _total.emitted.push_back(m.table());
        }
      }

      struct Trigger {
        std::uint32_t triple;
        std::uint8_t  bracketing;
      };

      SearchConfig const&                           _config;
      std::size_t                                   _n;
      std::size_t                                   _dim;
      std::vector<std::uint8_t>                     _cells;
      std::vector<std::uint16_t>                    _position;
      std::vector<std::pair<element_type, element_type>> _order;
      std::vector<Triple>                           _triples;
      std::vector<std::vector<Trigger>>             _triggers;
      std::vector<std::vector<std::uint32_t>>       _watches;
      std::vector<std::uint16_t>                    _undo;
      std::size_t                                   _broken_at = none;
      Subtotal                                      _total;
    };

    void check_config(SearchConfig const& config) {
      if (config.n == 0) {
        throw DomainError("census needs n >= 1");
      }
      if (config.n > 20) {
        throw DomainError("census order " + std::to_string(config.n)
                          + " is beyond any feasible search");
      }
      bool const lifted = config.allow_large || scale_override_from_env();
      std::size_t const guard
          = config.want_magmas ? census_magma_guard : census_monoid_guard;
      if (!lifted && config.n > guard) {
        throw ScaleGuardError(
            std::string(config.want_magmas ? "magma" : "monoid")
            + " census is limited to n <= " + std::to_string(guard)
            + " (set DISTMON_SCALE_OVERRIDE=1 to lift)");
      }
      if (config.arch_filter
          && (*config.arch_filter < 1 || *config.arch_filter > config.n)) {
        throw DomainError("arch filter must lie in 1..n");
      }
      if (config.job_count == 0) {
        throw DomainError("job count must be positive");
      }
      if (config.prefix_depth > free_cells(config.n)) {
        throw DomainError("prefix depth exceeds the number of free cells");
      }
    }

    CensusResult finish(SearchConfig const& config, std::vector<Subtotal>& parts) {
      CensusResult result;
      result.n = config.n;
      std::uint64_t              magmas = 0;
      std::vector<std::uint64_t> by_arch(config.n + 1, 0);
      for (auto& part : parts) {
        magmas += part.magmas;
        for (std::size_t k = 1; k <= config.n; ++k) {
          by_arch[k] += part.by_arch[k];
        }
        std::move(part.emitted.begin(), part.emitted.end(),
                  std::back_inserter(result.emitted));
      }
      if (config.want_magmas) {
        result.magma_count = BigCount(magmas);
      }
      for (std::size_t k = 1; k <= config.n; ++k) {
        if (!config.arch_filter || *config.arch_filter == k) {
          result.by_arch[k] = BigCount(by_arch[k]);
          result.monoid_count += by_arch[k];
        }
      }
      return result;
    }

    Subtotal run_prefix(SearchConfig const& config, SearchPrefix const& prefix) {
      SearchEngine engine(config);
      if (!engine.apply(prefix)) {
        Subtotal empty;
        empty.by_arch.assign(config.n + 1, 0);
        return empty;
      }
      engine.run(prefix.size());
      return engine.take();
    }

    std::size_t effective_depth(SearchConfig const& config) {
      if (config.prefix_depth == 0 && config.job_count > 1) {
        return std::min<std::size_t>(free_cells(config.n), 4);
      }
      return config.prefix_depth;
    }
  }  // namespace

  std::vector<SearchPrefix> partition_work(SearchConfig const& config) {
    check_config(config);
    std::vector<SearchPrefix> out;
    SearchEngine              engine(config);
    SearchPrefix              prefix;
    engine.collect_prefixes(0, config.prefix_depth, prefix, out);
    return out;
  }

  CensusResult enumerate_subtree(SearchConfig const& config,
                                 SearchPrefix const& prefix) {
    check_config(config);
    std::vector<Subtotal> parts;
    parts.push_back(run_prefix(config, prefix));
    return finish(config, parts);
  }

  CensusResult enumerate(SearchConfig const& config) {
    check_config(config);
    SearchConfig split = config;
    split.prefix_depth = effective_depth(config);
    std::vector<SearchPrefix> prefixes = split.prefix_depth == 0
                                             ? std::vector<SearchPrefix>{{}}
                                             : partition_work(split);

    std::vector<Subtotal> parts(prefixes.size());
    std::size_t const     workers
        = std::min<std::size_t>(config.job_count, prefixes.size());
    if (workers <= 1) {
      for (std::size_t i = 0; i < prefixes.size(); ++i) {
        parts[i] = run_prefix(config, prefixes[i]);
      }
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < prefixes.size(); i = next++) {
            parts[i] = run_prefix(config, prefixes[i]);
          }
        });
      }
      for (auto& t : pool) {
        t.join();
      }
    }
    return finish(config, parts);
  }

  std::vector<std::vector<BigCount>> dm_table(std::size_t n_max,
                                              std::size_t job_count,
                                              bool        allow_large) {
    std::vector<std::vector<BigCount>> rows;
    for (std::size_t n = 1; n <= n_max; ++n) {
      SearchConfig config;
      config.n           = n;
      config.job_count   = job_count;
      config.allow_large = allow_large;
      auto result        = enumerate(config);
      std::vector<BigCount> row;
      for (std::size_t k = 1; k <= n; ++k) {
        row.push_back(result.by_arch.at(k));
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }

}  // namespace distmon
