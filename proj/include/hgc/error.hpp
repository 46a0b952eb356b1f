#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hgc {

// Root of every exception the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke a documented precondition (bad width, n not a power of two, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

// A node index or size outside the valid range.
class OutOfRangeError : public ContractError {
 public:
  using ContractError::ContractError;
};

// BitReader ran past its limit.
class TruncatedStreamError : public Error {
 public:
  using Error::Error;
};

// A container failed validation; no partial result is produced.
class CorruptContainerError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. line() is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::uint64_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::uint64_t line() const noexcept { return line_; }

 private:
  std::uint64_t line_;
};

}  // namespace hgc
