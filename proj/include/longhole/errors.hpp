#pragma once

#include <stdexcept>
#include <string>

namespace longhole {

// Malformed or unsupported input (bad graph encoding, out-of-range vertex, ...).
class InputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// A structural object failed its own invariants, or a precondition of an operation was broken.
class InvariantViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

// Thrown from a checkpoint once the active deadline has passed or cancellation was requested.
class Cancelled : public std::runtime_error {
  public:
    Cancelled() : std::runtime_error("cancelled") {}
};

} // namespace longhole
