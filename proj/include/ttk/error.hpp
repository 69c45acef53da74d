#pragma once

#include <stdexcept>
#include <string>

namespace ttk {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid parameters or malformed input (maps to CLI exit code 2).
struct ValidationError : Error {
  using Error::Error;
};

// Exact division requested where none exists.  This is the canonical
// symptom of a convention or formula bug, so it is never downgraded
// to a warning.
struct DivisionError : Error {
  using Error::Error;
};

// A move script step that cannot be applied.  Carries the index of the
// first offending move.
struct MoveError : Error {
  int move_index;
  MoveError(int idx, const std::string& msg)
      : Error("move " + std::to_string(idx) + ": " + msg), move_index(idx) {}
};

// Text that does not parse in one of the documented formats.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace ttk
