#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace khov {

enum class ErrorCode {
  ParseError,
  DuplicateEdge,
  DanglingEdge,
  NonPlanar,
  BadNumbering,
  ComponentOutOfRange,
  DisconnectedDiagram,
  EdgeOutOfRange,
  UnknownName,
  NotAlternating,
  TooManyCrossings,
  NotACurl,
  BadBounds,
  BadOrdering,
  NotConnectedState,
  BadBasepoint,
  WrongSpecialization,
  ZeroVector,
  NotAComplex,
  EmbeddingUnavailable,
  NotACycle,
};

std::string_view error_name(ErrorCode code) noexcept;

// All recoverable failures of the library. what() reads "Name: detail".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace khov
