#pragma once

#include <stdexcept>

namespace covenum {

// Malformed input text: bad tokens, ids out of range, duplicate edges.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally valid input that violates a precondition of the requested
// operation, e.g. a disconnected graph passed to a connected-variant
// enumerator.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal contract violation: caller bug or failed integrity check.
struct contract_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace covenum
