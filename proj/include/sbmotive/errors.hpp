#pragma once

#include <stdexcept>
#include <string>

namespace sbmotive {

/// A caller broke a documented precondition (bad partition, box violation, ...).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Shape mismatch between matrices or index lists.
class DimensionError : public ContractError {
 public:
  using ContractError::ContractError;
};

/// The request is well-formed but outside what is implemented. Raised instead
/// of returning a coefficient we cannot vouch for.
class UnsupportedOperation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exactness check inside the library failed (non-integral quotient, ...).
class InternalInvariantFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Brute-force enumeration would exceed the configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Polynomial division was requested where it is not exact.
class DivisibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw ContractError(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InternalInvariantFailure(what);
}

}  // namespace detail
}  // namespace sbmotive
