#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cognates {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file. The message names the file and the first bad line.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A computation refused to run because it would exceed its resource budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace cognates
