#pragma once

#include <stdexcept>
#include <string>

namespace degentrig {

/// Argument outside the real-branch domain (lambda = 0, 1 + lambda*a <= 0, ...).
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A quotient was requested at a point where the denominator is exactly zero.
struct PoleError : std::domain_error {
  explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

/// A required integer parameter (m, n, k) is missing or out of range.
struct ParamError : std::invalid_argument {
  explicit ParamError(const std::string& what) : std::invalid_argument(what) {}
};

/// Pole filtering removed every candidate sample point.
struct EmptyGridError : std::runtime_error {
  explicit EmptyGridError(const std::string& what) : std::runtime_error(what) {}
};

/// Formal-series operands have different truncation orders.
struct OrderMismatchError : std::invalid_argument {
  explicit OrderMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

/// Formal-series division by a series with zero constant term.
struct NonInvertibleError : std::domain_error {
  explicit NonInvertibleError(const std::string& what) : std::domain_error(what) {}
};

/// The identity depends on pi-valued shifts or constants and cannot be
/// checked coefficient-exactly in the series ring.
struct NotExactCapableError : std::invalid_argument {
  explicit NotExactCapableError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace degentrig
