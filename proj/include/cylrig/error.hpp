#pragma once

#include <stdexcept>
#include <string>

namespace cylrig {

// Bad user input: malformed documents, invalid step parameters, unsupported groups.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A broken internal invariant. The CLI maps this to exit code 2.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cylrig
