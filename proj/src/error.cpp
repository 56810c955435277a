#include "hyperres/error.hpp"

namespace hyperres {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyEdge: return "EmptyEdge";
    case ErrorCode::kEmptyFamily: return "EmptyFamily";
    case ErrorCode::kSpernerViolation: return "SpernerViolation";
    case ErrorCode::kUncoveredVertex: return "UncoveredVertex";
    case ErrorCode::kDuplicateLabel: return "DuplicateLabel";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kNotAPartition: return "NotAPartition";
    case ErrorCode::kNotSperner: return "NotSperner";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kHypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::kEmptyFile: return "EmptyFile";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace hyperres
