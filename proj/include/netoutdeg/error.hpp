#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace netoutdeg {

using VoterId = std::uint64_t;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class UnknownAlternative : public Error {
 public:
  explicit UnknownAlternative(const std::string& label)
      : Error("unknown alternative '" + label + "'"), label_(label) {}
  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

class NotABijection : public Error {
 public:
  using Error::Error;
};

/// An operation was called on data outside its documented precondition.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// A hard size cap was hit; `requested` is the count that exceeded `limit`.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t requested,
                 std::uint64_t limit)
      : Error(what + ": budget exceeded (requested " +
              std::to_string(requested) + ", limit " + std::to_string(limit) +
              ")"),
        requested_(requested),
        limit_(limit) {}
  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t requested_;
  std::uint64_t limit_;
};

/// A ballot is outside the admissible class of a rule or axiom.
class DomainViolation : public Error {
 public:
  DomainViolation(VoterId voter, const std::string& required)
      : Error("voter " + std::to_string(voter) +
              ": ballot is not in the required class '" + required + "'"),
        voter_(voter),
        required_(required) {}
  VoterId voter() const noexcept { return voter_; }
  const std::string& required() const noexcept { return required_; }

 private:
  VoterId voter_;
  std::string required_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace netoutdeg
