#ifndef GENPOS_ERROR_HPP_
#define GENPOS_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace genpos {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed group descriptor or import file.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  // An arithmetic or structural precondition does not hold (p does not
  // divide q-1, subgroup not normal, insoluble input, ...).
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // A configured size cap would be exceeded.
  class CapExceeded : public Error {
   public:
    using Error::Error;
  };

  class NotMemberError : public Error {
   public:
    using Error::Error;
  };

  class ParentMismatch : public Error {
   public:
    ParentMismatch() : Error("subgroups belong to different parent groups") {}
  };

}  // namespace genpos

#endif  // GENPOS_ERROR_HPP_
