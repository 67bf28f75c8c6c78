#pragma once

#include <stdexcept>
#include <string>

namespace psc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Preconditions violated by the caller.
struct InvalidInput : Error {
  using Error::Error;
};

// A configured effort cap was exceeded (factoring, group enumeration).
struct ResourceLimit : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct MissingFixture : Error {
  using Error::Error;
};

struct UnsupportedFamily : Error {
  using Error::Error;
};

struct InvariantViolation : Error {
  using Error::Error;
};

}  // namespace psc
