#include "distmon/cli.hpp"

#include <optional>

#include "CLI11.hpp"

#include "distmon/arch.hpp"
#include "distmon/audit.hpp"
#include "distmon/builders.hpp"
#include "distmon/census.hpp"
#include "distmon/formulas.hpp"
#include "distmon/io.hpp"

namespace distmon {

  namespace {
    struct Options {
      std::string path;
      bool        expect_monoid = false;

      std::size_t              n = 0;
      std::optional<std::size_t> k;
      std::optional<std::size_t> arch;
      std::optional<std::size_t> m;
      bool                     magmas = false;
      bool                     count_only = false;
      bool                     table_csv = false;
      bool                     allow_large = false;
      std::string              emit_dir;
      std::size_t              jobs = 1;
      std::size_t              prefix_depth = 0;

      std::vector<std::string> values;
      std::vector<std::size_t> indices;
      std::string              spec_path;
      std::string              out_path;

      std::size_t n_max = 5;
      bool        deep = false;
      bool        inject_fault = false;
    };

    void emit_tables(std::vector<AdditionTable> const& tables,
                     std::string const& out_path, std::ostream& out) {
      if (out_path.empty()) {
        for (auto const& t : tables) {
          out << (tables.size() == 1 ? format_table(t) : to_json(t).dump() + "\n");
        }
      } else if (tables.size() == 1) {
        write_table_file(out_path, tables.front());
      } else {
        write_emission(out_path, tables);
      }
    }

    std::vector<AdditionTable> tables_of(std::vector<Monoid> const& ms) {
      std::vector<AdditionTable> out;
      for (auto const& m : ms) {
        out.push_back(m.table());
      }
      return out;
    }

    std::size_t need_k(Options const& o) {
      if (!o.k) {
        throw DomainError("--k is required");
      }
      return *o.k;
    }
  }  // namespace

  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err) {
    Options  o;
    CLI::App app{"Enumerate, verify, analyse and construct finite distance "
                 "monoids"};
    app.name("distmon");
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "Check the axioms of a monoid file");
    verify->add_option("path", o.path, "Monoid JSON file")->required();
    verify->add_flag("--expect-monoid", o.expect_monoid,
                     "Also require associativity");

    auto* analyze = app.add_subcommand("analyze", "Archimedean analysis of a monoid file");
    analyze->add_option("path", o.path, "Monoid JSON file")->required();

    auto* census = app.add_subcommand("census", "Exhaustive enumeration");
    census->add_option("--n", o.n, "Number of non-zero elements")->required();
    census->add_option("--arch", o.arch, "Keep only this complexity");
    census->add_flag("--magmas", o.magmas, "Enumerate all magmas as well");
    census->add_flag("--count-only", o.count_only, "Print only the count");
    census->add_flag("--table", o.table_csv,
                     "Print DM(m, k) for 1 <= k <= m <= n as CSV");
    census->add_option("--emit", o.emit_dir, "Write every counted monoid here");
    census->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    census->add_option("--prefix-depth", o.prefix_depth,
                       "Cells fixed per work unit");
    census->add_flag("--allow-large", o.allow_large, "Lift the desk-scale guard");

    auto* formula = app.add_subcommand("formula", "Closed-form counts");
    formula->require_subcommand(1);
    auto add_nk = [&](CLI::App* sub, bool with_k) {
      sub->add_option("--n", o.n)->required();
      if (with_k) {
        sub->add_option("--k", o.k)->required();
      }
    };
    auto* f_dm2 = formula->add_subcommand("dm2", "DM(n, 2)");
    add_nk(f_dm2, false);
    auto* f_bell = formula->add_subcommand("bell", "Bell number B_n");
    add_nk(f_bell, false);
    auto* f_stirling = formula->add_subcommand("stirling2", "S(n, k)");
    add_nk(f_stirling, true);
    auto* f_near = formula->add_subcommand("near-top", "DM(n, n - k), k <= 2");
    add_nk(f_near, true);
    auto* f_lower = formula->add_subcommand("lower-bound", "binomial(n - 2, k)");
    add_nk(f_lower, true);
    auto* f_chains = formula->add_subcommand("a-chains", "|A_k(n)| = (k + 1)^(n - 1)");
    add_nk(f_chains, true);

    auto* build = app.add_subcommand("build", "Construct monoid families");
    build->require_subcommand(1);
    auto* b_sup = build->add_subcommand("sup", "Sup-addition on given values");
    b_sup->add_option("--values", o.values, "Comma-separated rationals")
        ->required()
        ->delimiter(',');
    auto* b_c2 = build->add_subcommand("complexity2", "Complexity-2 monoid from a spec");
    b_c2->add_option("--spec", o.spec_path, "Complexity2Spec JSON file")->required();
    auto* b_lower = build->add_subcommand("lower-bound", "Binomial lower-bound family");
    b_lower->add_option("--n", o.n)->required();
    b_lower->add_option("--k", o.k)->required();
    b_lower->add_option("--indices", o.indices, "Non-decreasing k-tuple")
        ->delimiter(',');
    auto* b_counter = build->add_subcommand("counterexample",
                                            "Short-progression family R_m");
    b_counter->add_option("--m", o.m)->required();
    for (auto* sub : {b_sup, b_c2, b_lower, b_counter}) {
      sub->add_option("--out", o.out_path,
                      "Output file (directory for several members)");
    }

    auto* audit = app.add_subcommand("audit", "Cross-check census against formulas");
    audit->add_option("--n-max", o.n_max)->required();
    audit->add_flag("--deep", o.deep, "Include the n = 9 check");
    audit->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
    audit->add_flag("--inject-fault", o.inject_fault,
                    "Corrupt one census count (harness self-test)");

    std::vector<char const*> argv{"distmon"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_usage;
    }

    try {
      if (*verify) {
        auto report = validate(read_table_file(o.path));
        out << to_json(report).dump(2) << "\n";
        bool ok = report.is_magma && (!o.expect_monoid || report.is_monoid);
        return ok ? exit_ok : exit_failure;
      }
      if (*analyze) {
        Monoid m(read_table_file(o.path));
        out << analysis_json(m).dump(2) << "\n";
        return exit_ok;
      }
      if (*census) {
        if (o.table_csv) {
          out << dm_table_csv(dm_table(o.n, o.jobs, o.allow_large));
          return exit_ok;
        }
        SearchConfig config;
        config.n            = o.n;
        config.want_magmas  = o.magmas;
        config.arch_filter  = o.arch;
        config.emit         = !o.emit_dir.empty();
        config.job_count    = o.jobs;
        config.prefix_depth = o.prefix_depth;
        config.allow_large  = o.allow_large;
        auto result         = enumerate(config);
        if (config.emit) {
          write_emission(o.emit_dir, result.emitted);
        }
        if (o.count_only) {
          out << to_decimal(o.magmas ? *result.magma_count : result.monoid_count)
              << "\n";
        } else {
          out << to_json(result).dump(2) << "\n";
        }
        return exit_ok;
      }
      if (*formula) {
        BigCount value;
        if (*f_dm2) {
          value = dm_n_2(o.n);
        } else if (*f_bell) {
          value = bell(o.n);
        } else if (*f_stirling) {
          value = stirling2(o.n, need_k(o));
        } else if (*f_near) {
          value = dm_near_top(o.n, need_k(o));
        } else if (*f_lower) {
          value = dm_lower_bound(o.n, need_k(o));
        } else {
          value = count_A_chains(o.n, need_k(o)).formula;
        }
        out << to_decimal(value) << "\n";
        return exit_ok;
      }
      if (*build) {
        if (*b_sup) {
          std::vector<Rational> values;
          for (auto const& v : o.values) {
            values.push_back(parse_rational(v));
          }
          auto built = sup_monoid(values);
          emit_tables({built.table}, o.out_path, out);
          if (!built.is_monoid) {
            err << "distmon: sup-addition on these values is not associative\n";
            return exit_failure;
          }
          return exit_ok;
        }
        std::vector<Monoid> members;
        if (*b_c2) {
          members.push_back(build_complexity2(
              spec_from_json(parse_json(read_text_file(o.spec_path)))));
        } else if (*b_lower) {
          std::optional<std::vector<std::size_t>> indices;
          if (!o.indices.empty()) {
            indices = o.indices;
          }
          members = lower_bound_family(o.n, need_k(o), indices);
        } else {
          members.push_back(counterexample_family(*o.m));
        }
        emit_tables(tables_of(members), o.out_path, out);
        return exit_ok;
      }
      if (*audit) {
        AuditOptions options;
        options.n_max        = o.n_max;
        options.deep         = o.deep;
        options.job_count    = o.jobs;
        options.inject_fault = o.inject_fault;
        auto report          = run_audit(options);
        out << to_json(report).dump(2) << "\n";
        if (!report.pass()) {
          for (auto const& r : report.records) {
            if (!r.pass) {
              err << "distmon: audit check " << r.name << " failed at "
                  << r.parameters << ": expected " << r.expected << ", got "
                  << r.actual << "\n";
            }
          }
          return exit_failure;
        }
        return exit_ok;
      }
    } catch (ParseError const& e) {
      err << "distmon: " << e.what() << "\n";
      return exit_usage;
    } catch (DomainError const& e) {
      err << "distmon: " << e.what() << "\n";
      return exit_usage;
    } catch (ScaleGuardError const& e) {
      err << "distmon: " << e.what() << "\n";
      return exit_usage;
    } catch (NotAMonoid const& e) {
      err << "distmon: " << e.what() << "\n";
      return exit_failure;
    } catch (std::exception const& e) {
      err << "distmon: " << e.what() << "\n";
      return exit_failure;
    }
    return exit_usage;
  }

}  // namespace distmon
