#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace oacd {

enum class ErrorCode {
  CoincidentPoints,
  CoincidentLines,
  DegenerateInput,
  MalformedUnit,
  LengthMismatch,
  NotAParticle,
  BadDigit,
  NotAnEdge,
  NotACell,
  KindMismatch,
  EmptyCluster,
  BadCode,
  BadInput,
  BboxTooSmall,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace oacd
