#ifndef DISTMON_ERRORS_HPP_
#define DISTMON_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace distmon {

  //! Base class of every exception thrown by the library.
  struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  //! Malformed input: wrong shape, cell out of range, bad JSON.
  struct ParseError : Error {
    using Error::Error;
  };

  //! An operation that requires associativity received a magma.
  struct NotAMonoid : Error {
    using Error::Error;
  };

  //! Arguments outside the domain of an operation or formula.
  struct DomainError : Error {
    using Error::Error;
  };

  //! A desk-scale guard was exceeded and no override was given.
  struct ScaleGuardError : Error {
    using Error::Error;
  };

  //! Returns true if DISTMON_SCALE_OVERRIDE=1 is set in the environment.
  bool scale_override_from_env();

}  // namespace distmon

#endif  // DISTMON_ERRORS_HPP_
