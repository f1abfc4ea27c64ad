// The distmon command line.  Exit status: 0 success, 1 a mathematical or
// validation failure, 2 a usage or parse failure.

#ifndef DISTMON_CLI_HPP_
#define DISTMON_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace distmon {

  inline constexpr int exit_ok      = 0;
  inline constexpr int exit_failure = 1;
  inline constexpr int exit_usage   = 2;

  //! args excludes the program name.
  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err);

}  // namespace distmon

#endif  // DISTMON_CLI_HPP_
