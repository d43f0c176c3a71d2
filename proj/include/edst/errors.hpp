#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edst {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. The offset is a byte offset into the caller's string.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error("at byte " + std::to_string(offset) + ": " + message), offset_(offset), message_(message) {}
  std::size_t offset() const noexcept { return offset_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t offset_;
  std::string message_;
};

class NumeralError : public Error {
 public:
  using Error::Error;
};

class ContextError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// A magnitude that the target context cannot express with its units and fractions.
class RepresentationError : public Error {
 public:
  using Error::Error;
};

class SchemeError : public Error {
 public:
  using Error::Error;
};

class CorpusError : public Error {
 public:
  CorpusError(const std::string& source, std::size_t line, const std::string& message)
      : Error(source + ":" + std::to_string(line) + ": " + message), line_(line) {}
  explicit CorpusError(const std::string& message) : Error(message), line_(0) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace edst
