#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qweyl {

enum class ErrorCode {
  DivisionByZero,
  ZeroScalar,
  ExponentOverflow,
  PresentationMismatch,
  ModeMismatch,
  LambdaModeMismatch,
  SpecMismatch,
  WindowTooSmall,
  DegenerateCharacter,
  RankNotOne,
  SyntaxError,
  NegativeExponent,
  UnknownGenerator,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

/// Parse failure at a byte offset of the source text.
class SyntaxError : public Error {
public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::SyntaxError, "at byte " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

}  // namespace qweyl
