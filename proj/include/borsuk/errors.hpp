#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace borsuk {

// Input that violates a constructor's domain (M(A,1), CP^1, Z/1, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A space outside the table of families whose homology / fundamental group
// is computed here.
class UnsupportedSpace : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by dominated-type enumeration when the capacity is not an exact
// finite value.
class UnsupportedCapacity : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Brute-force routines refuse infinite or oversized inputs.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t column, std::string expected, const std::string& what)
      : std::runtime_error(what), column_(column), expected_(std::move(expected)) {}

  /// 1-based column of the offending character.
  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t column_;
  std::string expected_;
};

}  // namespace borsuk
