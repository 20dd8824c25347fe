#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cayley {

enum class ErrorCode {
  InvalidGraph,
  ParseError,
  NoSuchEdge,
  HostTooLarge,
  TooSmall,
  EmptyGraph,
  Disconnected,
  NotABaseNonEdge,
  StuckConstruction,
  IndexOutOfRange,
  ExtremeEdgeExists,
  NotOneDofTreeDecomposable,
  TooFewSteps,
  BadSize,
  UnknownFamily,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace cayley
