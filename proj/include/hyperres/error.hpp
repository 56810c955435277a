#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperres {

enum class ErrorCode {
  kEmptyEdge,
  kEmptyFamily,
  kSpernerViolation,
  kUncoveredVertex,
  kDuplicateLabel,
  kVertexOutOfRange,
  kDisconnected,
  kEmptySet,
  kNotAPartition,
  kNotSperner,
  kCapExceeded,
  kInvalidSpec,
  kHypothesisNotMet,
  kEmptyFile,
  kParse,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hyperres
