#pragma once

#include <stdexcept>
#include <string>

namespace edcol {

enum class ErrorCode {
  Parse,
  InvalidArgument,
  OutOfRange,
  Io,
  Validation,
  Budget,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class ParseErrorKind {
  Malformed,
  MissingHeader,
  DuplicateHeader,
  VertexOutOfRange,
  DuplicateEdge,
  SelfLoop,
  EdgeCountMismatch,
};

/// Raised by the text readers. `line()` is 1-based; 0 means "end of input".
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& detail);
  ParseErrorKind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  int line_;
};

const char* to_string(ParseErrorKind kind) noexcept;

}  // namespace edcol
