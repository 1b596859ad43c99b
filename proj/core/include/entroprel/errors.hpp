// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace entroprel {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A stress row deviates from unit sum by more than the acceptance tolerance.
class RowSumError : public Error {
  public:
    using Error::Error;
};

/// Dimension mismatch (row count vs component count, matrix vs scenario, ...).
class ShapeError : public Error {
  public:
    using Error::Error;
};

/// A scalar field lies outside its allowed domain.
class RangeError : public Error {
  public:
    using Error::Error;
};

/// Charging-time denominator (power * efficiency) is zero.
class DivisionDomainError : public Error {
  public:
    using Error::Error;
};

/// Entropy input outside (0, 1].
class DomainError : public Error {
  public:
    using Error::Error;
};

/// A per-component failure probability sum exceeded 1.
class ProbabilityOverflowError : public Error {
  public:
    using Error::Error;
};

/// Every stress probability is zero; the objective is independent of the
/// multipliers and estimation is meaningless.
class DegenerateScenarioError : public Error {
  public:
    using Error::Error;
};

/// Scenario document could not be parsed.
class ParseError : public Error {
  public:
    using Error::Error;
};

} // namespace entroprel
