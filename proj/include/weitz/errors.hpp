#pragma once

#include <stdexcept>
#include <string>

namespace weitz {

// Base of every domain error raised by the library. The CLI maps these to
// exit code 1; ParseError and UsageError map to 2.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept = 0;
};

#define WEITZ_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                      \
  public:                                                          \
    explicit Name(const std::string& what) : Error(what) {}        \
    const char* kind() const noexcept override { return #Name; }   \
  };

WEITZ_DEFINE_ERROR(DimensionMismatch)
WEITZ_DEFINE_ERROR(InvalidArity)
WEITZ_DEFINE_ERROR(InvalidArgument)
WEITZ_DEFINE_ERROR(DivisionByZero)
WEITZ_DEFINE_ERROR(NotDivisible)
WEITZ_DEFINE_ERROR(ZeroPolynomial)
WEITZ_DEFINE_ERROR(NotAConstant)
WEITZ_DEFINE_ERROR(NotALeadingMonomial)

#undef WEITZ_DEFINE_ERROR

} // namespace weitz
