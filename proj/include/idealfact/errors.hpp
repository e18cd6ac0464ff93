#pragma once

#include <stdexcept>
#include <string>

namespace idealfact {

// Precondition violations and malformed input use std::invalid_argument /
// std::domain_error. The types below mark failures the caller cannot fix by
// changing the input.

/// Raised when an invariant that upstream code guarantees turns out false.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// Raised when a randomized procedure exhausts its draw budget.
class ProbabilisticFailure : public std::runtime_error {
 public:
  explicit ProbabilisticFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace idealfact
