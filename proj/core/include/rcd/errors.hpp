#pragma once

#include <stdexcept>
#include <string>

namespace rcd {

// Malformed input: bad ids, loops, duplicate edges, inconsistent rotations.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exact oracle was asked to run beyond its size limit.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input is well formed but violates a structural hypothesis of the algorithm
// (disconnected graph, non-minimal embedding, singular incident face, ...).
class HypothesisViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A postcondition that holds for every valid input failed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rcd
