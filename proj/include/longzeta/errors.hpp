#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace longzeta {

/// Base of every error raised for bad input (CLI exit code 1).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t token_index, std::size_t offset)
      : Error(what), token_index_(token_index), offset_(offset) {}

  /// 1-based index of the offending token.
  std::size_t token_index() const { return token_index_; }
  /// 0-based character offset into the input text.
  std::size_t offset() const { return offset_; }

 private:
  std::size_t token_index_;
  std::size_t offset_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A move whose site does not match the required pattern.
class MoveError : public Error {
 public:
  using Error::Error;
};

/// A broken internal invariant, i.e. a bug (CLI exit code 2).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace longzeta
