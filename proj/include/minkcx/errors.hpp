/*
 * Error types shared across the library.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace minkcx {

// Enumeration window or search effort exceeded a configured budget.
class BudgetError : public std::runtime_error {
  public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// A constructed object failed its built-in re-verification. Signals a bug,
// not bad input.
class VerificationError : public std::runtime_error {
  public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

// A document could not be parsed into a valid value.
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace minkcx
