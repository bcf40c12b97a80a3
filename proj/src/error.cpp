#include "selfloop/error.hpp"

namespace selfloop {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::DuplicateLoop: return "DuplicateLoop";
    case ErrorCode::SelfPairInEdgeList: return "SelfPairInEdgeList";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NegativeExponentUnsupported: return "NegativeExponentUnsupported";
    case ErrorCode::DisconnectedInput: return "DisconnectedInput";
    case ErrorCode::ConstraintViolation: return "ConstraintViolation";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::InvalidLoopPlacement: return "InvalidLoopPlacement";
    case ErrorCode::NotAPathOrCycle: return "NotAPathOrCycle";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace selfloop
