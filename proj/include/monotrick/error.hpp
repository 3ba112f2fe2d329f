#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace monotrick {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the formula parser. Positions are 1-based; columns count code
/// points, not bytes.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column,
             std::vector<std::string> expected);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

/// One predicate letter used with two different arities.
class ArityError : public Error {
 public:
  using Error::Error;
};

class TranslationError : public Error {
 public:
  using Error::Error;
};

class EvalError : public Error {
 public:
  using Error::Error;
};

/// Malformed model, frame or corpus file.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace monotrick
