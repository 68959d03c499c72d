#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace srginv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph input. `offset()` is the byte offset (graph6) or the
/// zero-based line number (row format) where decoding failed.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A matrix-power entry left the range of checked 64-bit arithmetic.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An argument violated an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace srginv
