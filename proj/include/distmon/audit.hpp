// Cross-checks between the census, the closed forms and the structural
// theorems, reported as a list of pass/fail records.

#ifndef DISTMON_AUDIT_HPP_
#define DISTMON_AUDIT_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "distmon/io.hpp"

namespace distmon {

  struct CheckRecord {
    std::string name;
    std::string parameters;
    std::string expected;
    std::string actual;
    bool        pass = false;
  };

  struct AuditReport {
    std::vector<CheckRecord> records;

    bool pass() const;
  };

  struct AuditOptions {
    std::size_t n_max = 5;
    //! Adds the n = 9 census against DM(9, 7) = 137.
    bool        deep = false;
    std::size_t job_count = 1;
    bool        allow_large = false;
    //! Test hook: corrupts the first complexity-2 census count.
    bool inject_fault = false;
  };

  AuditReport run_audit(AuditOptions const& options);

  Json to_json(AuditReport const& report);

}  // namespace distmon

#endif  // DISTMON_AUDIT_HPP_
