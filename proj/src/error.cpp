#include "pathpart/error.hpp"

namespace pathpart {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidGraph: return "INVALID_GRAPH";
    case ErrorCode::kCycleFound: return "CYCLE_FOUND";
    case ErrorCode::kNotADag: return "NOT_A_DAG";
    case ErrorCode::kBudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::kInfeasible: return "INFEASIBLE";
    case ErrorCode::kUnsupportedInput: return "UNSUPPORTED_INPUT";
    case ErrorCode::kReconstructionFailed: return "RECONSTRUCTION_FAILED";
    case ErrorCode::kMalformedMatching: return "MALFORMED_MATCHING";
    case ErrorCode::kMalformedInstance: return "MALFORMED_INSTANCE";
    case ErrorCode::kBadK: return "BAD_K";
    case ErrorCode::kNotBipartite: return "NOT_BIPARTITE";
    case ErrorCode::kBadOrder: return "BAD_ORDER";
    case ErrorCode::kParseError: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace pathpart
