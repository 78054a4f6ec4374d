#include "khov/error.hpp"

namespace khov {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::DanglingEdge: return "DanglingEdge";
    case ErrorCode::NonPlanar: return "NonPlanar";
    case ErrorCode::BadNumbering: return "BadNumbering";
    case ErrorCode::ComponentOutOfRange: return "ComponentOutOfRange";
    case ErrorCode::DisconnectedDiagram: return "DisconnectedDiagram";
    case ErrorCode::EdgeOutOfRange: return "EdgeOutOfRange";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::NotAlternating: return "NotAlternating";
    case ErrorCode::TooManyCrossings: return "TooManyCrossings";
    case ErrorCode::NotACurl: return "NotACurl";
    case ErrorCode::BadBounds: return "BadBounds";
    case ErrorCode::BadOrdering: return "BadOrdering";
    case ErrorCode::NotConnectedState: return "NotConnectedState";
    case ErrorCode::BadBasepoint: return "BadBasepoint";
    case ErrorCode::WrongSpecialization: return "WrongSpecialization";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotAComplex: return "NotAComplex";
    case ErrorCode::EmbeddingUnavailable: return "EmbeddingUnavailable";
    case ErrorCode::NotACycle: return "NotACycle";
  }
  return "Error";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

}  // namespace khov
