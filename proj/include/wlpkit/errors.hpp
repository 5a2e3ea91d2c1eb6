#pragma once

#include <stdexcept>
#include <string>

namespace wlpkit {

/// Modulus handed to a prime-field routine is not prime (or out of range).
class InvalidModulus : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Apolar action of a form of degree a on a dual polynomial of degree e < a.
class DegreeUnderflow : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// No zero graded piece was found before the artinian guard degree.
class NotArtinian : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A modular rank exceeded an oracle upper bound: either the oracle or the
/// engine is wrong. Never clamp.
class RankInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The two independent routes to a multiplication rank disagreed.
class DualPathMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Every random draw produced a non-generic instance.
class GenericityFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ideal specification document.
class SpecParseError : public std::runtime_error {
 public:
  SpecParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace wlpkit
