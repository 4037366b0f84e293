#pragma once

#include <stdexcept>
#include <string>

namespace rforge {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct CommutingPairError : Error {
  using Error::Error;
};

struct ZeroExponentError : Error {
  using Error::Error;
};

struct ZeroParameterError : Error {
  using Error::Error;
};

struct NonzeroExponentSumError : Error {
  using Error::Error;
};

struct WindowTooSmallError : Error {
  using Error::Error;
};

struct UnknownGeneratorError : Error {
  using Error::Error;
};

struct SignatureMismatchError : Error {
  using Error::Error;
};

struct InvalidPresentationError : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line;
  int col;
  ParseError(const std::string& msg, int line_, int col_)
      : Error(msg + " (line " + std::to_string(line_) + ", col " + std::to_string(col_) + ")"),
        line(line_),
        col(col_) {}
};

}  // namespace rforge
