#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qplane {

enum class ErrorCode {
  Parse,         // E_PARSE
  Incompatible,  // E_INCOMPATIBLE
  Mode,          // E_MODE
  Kind,          // E_KIND
  DivByZero,     // E_DIVZERO
  Internal,      // E_INTERNAL
};

std::string_view error_code_name(ErrorCode code);

/// Base class of every error raised by the library. The code is stable and is
/// what the command-line front-end reports.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorCode::Parse, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ModeError : public Error {
 public:
  explicit ModeError(const std::string& what) : Error(ErrorCode::Mode, what) {}
};

class WrongSigmaKind : public Error {
 public:
  explicit WrongSigmaKind(const std::string& what) : Error(ErrorCode::Kind, what) {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error(ErrorCode::DivByZero, "division by zero") {}
};

}  // namespace qplane
