#pragma once

#include <stdexcept>
#include <string>

namespace normdyn {

/// Argument outside the mathematical domain of an operation
/// (probability not in [0,1], non-positive Beta shape, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A conditioning event has (numerically) zero probability, so the
/// requested conditional quantity does not exist.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation needs a full contribution density but only summary
/// statistics were supplied.
class DistributionRequiredError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace normdyn
