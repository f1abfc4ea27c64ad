#include "distmon/audit.hpp"

#include <set>

#include "distmon/arch.hpp"
#include "distmon/builders.hpp"
#include "distmon/formulas.hpp"
#include "distmon/robbins.hpp"

namespace distmon {

  namespace {
    std::string param_n(std::size_t n) {
      return "n=" + std::to_string(n);
    }

    std::string param_nk(std::size_t n, std::size_t k) {
      return "n=" + std::to_string(n) + ",k=" + std::to_string(k);
    }

    class Recorder {
     public:
      explicit Recorder(AuditReport& report) : _report(report) {}

      void equal(std::string name, std::string params, BigCount const& expected,
                 BigCount const& actual) {
        _report.records.push_back({std::move(name), std::move(params),
                                   to_decimal(expected), to_decimal(actual),
                                   expected == actual});
      }

      void predicate(std::string name, std::string params, std::string expected,
                     std::string actual, bool pass) {
        _report.records.push_back({std::move(name), std::move(params),
                                   std::move(expected), std::move(actual),
                                   pass});
      }

     private:
      AuditReport& _report;
    };
  }  // namespace

  bool AuditReport::pass() const {
    for (auto const& r : records) {
      if (!r.pass) {
        return false;
      }
    }
    return true;
  }

  AuditReport run_audit(AuditOptions const& options) {
    if (options.n_max < 1) {
      throw DomainError("audit needs n_max >= 1");
    }
    bool const  lifted = options.allow_large || scale_override_from_env();
    AuditReport report;
    Recorder    rec(report);
    bool        fault_pending = options.inject_fault;

    for (std::size_t n = 1; n <= options.n_max; ++n) {
      SearchConfig config;
      config.n           = n;
      config.want_magmas = n <= census_magma_guard || (lifted && n <= 8);
      config.emit        = true;
      config.job_count   = options.job_count;
      config.allow_large = options.allow_large;
      CensusResult census = enumerate(config);
      if (fault_pending && n >= 2) {
        census.by_arch[2] += 1;
        fault_pending = false;
      }
      auto arch_count = [&](std::size_t k) { return census.by_arch.at(k); };

      // DM(n, 1) = DM(n, n) = 1
      rec.equal("extremes-arch1", param_n(n), 1, arch_count(1));
      rec.equal("extremes-archn", param_n(n), 1, arch_count(n));

      // (a) complexity 2 against the composition sum and B_n - 1.
      if (n >= 2) {
        BigCount formula = dm_n_2(n);
        BigCount bell_m1 = bell(n) - 1;
        rec.predicate("a:dm2-census-formula-bell", param_n(n),
                      to_decimal(formula) + " (bell-1=" + to_decimal(bell_m1) + ")",
                      to_decimal(arch_count(2)),
                      formula == arch_count(2) && formula == bell_m1);
      }

      // (b) DM(n, n - 1) = 2n - 2
      if (n >= 3) {
        rec.equal("b:near-top-k1", param_n(n), dm_near_top(n, 1),
                  arch_count(n - 1));
      }

      // (c) magma counts against the Robbins numbers.
      if (census.magma_count && n < robbins_numbers.size()) {
        rec.equal("c:magmas-robbins", param_n(n), BigCount(robbins_numbers[n]),
                  *census.magma_count);
      }

      // (d) reachable-sum complexity against the naive oracle.
      if (n <= 5) {
        std::size_t mismatches = 0;
        for (auto const& t : census.emitted) {
          Monoid m = Monoid::unchecked(t);
          if (arch_complexity(m) != arch_complexity_naive(m)) {
            ++mismatches;
          }
        }
        rec.predicate("d:arch-oracle", param_n(n), "0 mismatches",
                      std::to_string(mismatches) + " mismatches over "
                          + std::to_string(census.emitted.size()),
                      mismatches == 0);
      }

      // (e) long progressions when n > 4k, here k = 1.
      if (n >= 5) {
        std::size_t checked = 0, exceptions = 0;
        for (auto const& t : census.emitted) {
          Monoid m = Monoid::unchecked(t);
          if (arch_complexity(m) != n - 1) {
            continue;
          }
          ++checked;
          if (ap_profile(m).longest < n - 1 || !progression_witness(m, n - 1)) {
            ++exceptions;
          }
        }
        rec.predicate("e:ap-theorem-k1", param_n(n), "0 exceptions",
                      std::to_string(exceptions) + " exceptions over "
                          + std::to_string(checked),
                      exceptions == 0 && checked > 0);
      }

      // (f) the structured complexity-2 family equals the census stratum.
      if (n >= 2 && n <= complexity2_guard) {
        std::set<AdditionTable> built, found;
        for (auto const& m : enumerate_complexity2(n)) {
          built.insert(m.table());
        }
        for (auto const& t : census.emitted) {
          if (arch_complexity(Monoid::unchecked(t)) == 2) {
            found.insert(t);
          }
        }
        rec.predicate("f:complexity2-bijection", param_n(n),
                      "set-equal, " + to_decimal(dm_n_2(n)) + " tables",
                      std::to_string(built.size()) + " built, "
                          + std::to_string(found.size()) + " in census",
                      built == found && BigCount(built.size()) == dm_n_2(n));
      }

      // (g) binomial lower bound for DM(n, n - k).
      for (std::size_t k = 1; k <= 3; ++k) {
        if (n >= k + 2 && n >= 5) {
          BigCount bound = dm_lower_bound(n, k);
          rec.predicate("g:lower-bound-sandwich", param_nk(n, k),
                        ">= " + to_decimal(bound), to_decimal(arch_count(n - k)),
                        bound <= arch_count(n - k));
        }
      }

      // (h) class decomposition against idempotent splitting.
      std::size_t failures = 0;
      for (auto const& t : census.emitted) {
        try {
          Monoid m = Monoid::unchecked(t);
          if (decompose(m).sizes.size() != idempotents(t).size()) {
            ++failures;
          }
        } catch (std::logic_error const&) {
          ++failures;
        }
      }
      rec.predicate("h:decomposition-idempotents", param_n(n), "0 failures",
                    std::to_string(failures) + " failures over "
                        + std::to_string(census.emitted.size()),
                    failures == 0);
    }

    // (i) DM(9, 7) against the closed form for DM(n, n - 2).
    if (options.deep) {
      SearchConfig config;
      config.n           = 9;
      config.arch_filter = 7;
      config.job_count   = options.job_count;
      config.allow_large = true;
      CensusResult census = enumerate(config);
      rec.equal("i:near-top-k2-deep", param_n(9), dm_near_top(9, 2),
                census.by_arch.at(7));
    }
    return report;
  }

  Json to_json(AuditReport const& report) {
    Json records = Json::array();
    for (auto const& r : report.records) {
      records.push_back({{"check", r.name},
                         {"parameters", r.parameters},
                         {"expected", r.expected},
                         {"actual", r.actual},
                         {"pass", r.pass}});
    }
    Json j;
    j["pass"]    = report.pass();
    j["records"] = std::move(records);
    return j;
  }

}  // namespace distmon
