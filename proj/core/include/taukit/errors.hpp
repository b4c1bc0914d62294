#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace taukit {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A malformed input line; thrown in strict parse mode only.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string reason)
      : Error("line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(std::move(reason)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class EmptyStream : public Error {
 public:
  EmptyStream() : Error("event stream has no events") {}
};

class InsufficientEvents : public Error {
 public:
  InsufficientEvents() : Error("not enough events") {}
  using Error::Error;
};

// Every tail value equals the cutoff, so the log-likelihood has no maximum.
class DegenerateTail : public Error {
 public:
  DegenerateTail() : Error("degenerate tail: no value exceeds the cutoff") {}
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Memory coefficient is undefined: one of the offset subsequences is constant.
class ZeroVariance : public Error {
 public:
  ZeroVariance() : Error("zero variance in an offset subsequence") {}
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class UnknownUser : public Error {
 public:
  explicit UnknownUser(const std::string& user)
      : Error("unknown user: " + user) {}
};

}  // namespace taukit
