#pragma once

#include <stdexcept>
#include <string>

namespace ckp {

/// Caller-supplied data violates a documented precondition or format.
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An operation was invoked on a state that breaks its contract.
struct contract_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// An internal invariant failed; the message carries a state dump.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// Rejection sampling exhausted its attempt limit.
struct generation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ckp
