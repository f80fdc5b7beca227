#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace parith {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised by the parser; carries the byte offset and 1-based line/column.
struct SyntaxError : Error {
  std::size_t offset;
  std::size_t line;
  std::size_t column;
  SyntaxError(const std::string& msg, std::size_t off, std::size_t ln, std::size_t col)
      : Error(msg + " at line " + std::to_string(ln) + ":" + std::to_string(col)),
        offset(off), line(ln), column(col) {}
};

struct RankError : Error {
  using Error::Error;
};

struct SortError : Error {
  using Error::Error;
};

struct UnboundVariable : Error {
  using Error::Error;
};

struct ResourceError : Error {
  using Error::Error;
};

struct NoFixpoint : Error {
  using Error::Error;
};

struct DepthExceeded : Error {
  using Error::Error;
};

struct ZeroDenominator : Error {
  using Error::Error;
};

struct AllDefined : Error {
  using Error::Error;
};

struct ShortTable : Error {
  std::size_t position;
  ShortTable(const std::string& msg, std::size_t pos) : Error(msg), position(pos) {}
};

}  // namespace parith
