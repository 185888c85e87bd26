#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace achain {

/// Raised when a sequence fails addition-chain validation.
class ChainError : public std::runtime_error {
 public:
  enum class Kind {
    empty,
    not_positive,
    first_not_one,
    not_ascending,
    no_justification,
    bad_justification,
  };

  ChainError(Kind kind, std::size_t index, const std::string& what)
      : std::runtime_error(what), kind_(kind), index_(index) {}

  Kind kind() const noexcept { return kind_; }
  /// Offending element index (0 for whole-sequence errors).
  std::size_t index() const noexcept { return index_; }

 private:
  Kind kind_;
  std::size_t index_;
};

/// Malformed chain-v1 text; line() is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotStarError : public std::invalid_argument {
 public:
  NotStarError(std::size_t index, const std::string& what)
      : std::invalid_argument(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class LimitTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

class HypothesisViolated : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace achain
