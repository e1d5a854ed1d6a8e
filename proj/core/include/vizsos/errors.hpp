#pragma once

#include <stdexcept>
#include <string>

namespace vizsos {

// Exit-code mapping used by the CLI: validation -> 2, guard -> 3,
// verification -> 4.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad user input: parameter ranges, unknown names, malformed files.
struct ValidationError : Error {
  using Error::Error;
};

// Structural misuse: mixed variable universes, mismatched orders, shapes.
struct StructuralError : Error {
  using Error::Error;
};

// A configured resource guard (size, pair limit, ...) was exceeded.
struct GuardError : Error {
  using Error::Error;
};

// An exact verification that was expected to succeed failed.
struct VerificationError : Error {
  using Error::Error;
};

}  // namespace vizsos
