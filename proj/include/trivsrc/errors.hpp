#pragma once

#include <stdexcept>
#include <string>

namespace trivsrc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input is valid but outside the supported scope (e.g. Sylow 2-subgroup
// larger than a Klein four-group). CLI exit code 2.
struct ScopeError : Error {
  using Error::Error;
};

// Malformed input (JSON, permutation images, flags). CLI exit code 3.
struct ParseError : Error {
  using Error::Error;
};

// No consistent classification exists, or several inequivalent ones do.
// CLI exit code 4.
struct ClassifyError : Error {
  using Error::Error;
};

// An internal invariant failed; indicates a bug or inconsistent input data.
struct StructureError : Error {
  using Error::Error;
};

} // namespace trivsrc
