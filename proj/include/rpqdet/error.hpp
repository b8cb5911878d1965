#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rpqdet {

enum class ErrorCode {
  Syntax,
  UnknownSymbol,
  UnknownVertex,
  InvalidArgument,
  EmptyWord,
  EpsilonLanguage,
  ForeignSymbol,
  WitnessRejected,
  ScriptExhausted,
  GuidanceFailure,
  SearchSpaceTooLarge,
  SizeMismatch,
  MalformedTiling,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Syntax errors carry the byte offset of the offending token.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorCode::Syntax,
              "syntax error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace rpqdet
