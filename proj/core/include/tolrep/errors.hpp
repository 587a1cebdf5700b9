// Exception types shared by every tolrep module.

#ifndef TOLREP_ERRORS_HPP_
#define TOLREP_ERRORS_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace tolrep {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Relations or algebras over universes of different sizes.
  class DimensionError : public Error {
   public:
    using Error::Error;
  };

  // Bad element, arity, or other malformed argument.
  class ArgumentError : public Error {
   public:
    using Error::Error;
  };

  // Unknown operation, variable, relation, or corpus entry.
  class LookupError : public Error {
   public:
    using Error::Error;
  };

  // A documented precondition of a decision procedure does not hold.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // A node or relation budget ran out. This is never a decision.
  class ResourceError : public Error {
   public:
    using Error::Error;
  };

  class SyntaxError : public Error {
   public:
    SyntaxError(std::string const& msg, std::size_t position)
        : Error(msg + " at position " + std::to_string(position)),
          _position(position) {}

    std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

}  // namespace tolrep

#endif  // TOLREP_ERRORS_HPP_
