#pragma once

#include <stdexcept>
#include <string>

namespace rta {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// malformed user input: bad image tables, bad JSON, bad symbols
struct ParseError : Error {
  using Error::Error;
};

// a construction would exceed the configured point-degree cap
struct CapError : Error {
  using Error::Error;
};

}  // namespace rta
