#include "oacd/error.hpp"

namespace oacd {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::CoincidentLines: return "CoincidentLines";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::MalformedUnit: return "MalformedUnit";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotAParticle: return "NotAParticle";
    case ErrorCode::BadDigit: return "BadDigit";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::NotACell: return "NotACell";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::EmptyCluster: return "EmptyCluster";
    case ErrorCode::BadCode: return "BadCode";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::BboxTooSmall: return "BboxTooSmall";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace oacd
