#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace igusa {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial or job text. `position` is a 0-based character offset
/// for polynomials and a 1-based line number for job files.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position, const std::string& unit = "position")
      : Error(what + " at " + unit + " " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Precondition violations on otherwise well-formed input (zero polynomial,
/// negative direction, dimension cap, even prime, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed the configured point budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, double requested, double cap)
      : Error(what + " (requested " + std::to_string(requested) + " points, cap " +
              std::to_string(cap) + ")"),
        requested_(requested),
        cap_(cap) {}
  double requested() const noexcept { return requested_; }
  double cap() const noexcept { return cap_; }

 private:
  double requested_;
  double cap_;
};

/// A hypothesis the explicit formula depends on (convenience, non-degeneracy,
/// good reduction) failed. `detail` carries a human-readable witness.
class HypothesisError : public Error {
 public:
  HypothesisError(const std::string& what, std::string detail)
      : Error(what + ": " + detail), detail_(std::move(detail)) {}
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
};

}  // namespace igusa
