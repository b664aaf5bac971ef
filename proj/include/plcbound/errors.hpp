#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace plcbound {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when s, t, list sizes or other numeric arguments violate an
/// operation's preconditions (e.g. s <= t).
class InvalidParameters : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of a real function (eval_f with x > 1, g(v) with v outside (0,1)).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A search exceeded its node budget; the answer is unknown, not negative.
class ResourceExhausted : public Error {
 public:
  explicit ResourceExhausted(std::uint64_t budget)
      : Error("search node budget of " + std::to_string(budget) + " exceeded; result unknown"),
        budget_(budget) {}

  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t budget_;
};

/// No s-list coloring of the augmented lists exists, so the partition scheme cannot start.
class SchemeInapplicable : public Error {
 public:
  using Error::Error;
};

}  // namespace plcbound
