#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pvtopo {

enum class ErrorKind {
  CyclicOrder,
  DuplicateVertexInSimplex,
  IndexOutOfRange,
  UnknownVertex,
  PreconditionViolated,
  Syntax,
  UndeclaredSemaphore,
  DuplicateName,
  NonPositiveCapacity,
  InvalidInput,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CyclicOrder: return "CyclicOrder";
    case ErrorKind::DuplicateVertexInSimplex: return "DuplicateVertexInSimplex";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::UndeclaredSemaphore: return "UndeclaredSemaphore";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::NonPositiveCapacity: return "NonPositiveCapacity";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// 1-based line and column.
struct SourcePos {
  int line = 1;
  int column = 1;
};

// Errors attached to a location in some input text. Syntax errors also
// carry the tokens that would have been accepted.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, SourcePos pos, const std::string& what,
             std::vector<std::string> expected = {})
      : Error(kind, "line " + std::to_string(pos.line) + ", column " +
                        std::to_string(pos.column) + ": " + what),
        pos_(pos),
        expected_(std::move(expected)) {}

  SourcePos pos() const noexcept { return pos_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  SourcePos pos_;
  std::vector<std::string> expected_;
};

}  // namespace pvtopo
