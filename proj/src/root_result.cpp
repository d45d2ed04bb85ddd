#include "sqroot/root_result.hpp"

namespace sqroot {

std::string_view to_string(RejectionStage stage) {
  switch (stage) {
    case RejectionStage::NotConnected: return "not-connected";
    case RejectionStage::NotChordal: return "not-chordal";
    case RejectionStage::AssignmentInfeasible: return "assignment-infeasible";
    case RejectionStage::TooManyCliques: return "too-many-cliques";
    case RejectionStage::IntersectionCondition: return "intersection-condition";
    case RejectionStage::NotHereditaryCliqueHelly: return "not-hereditary-clique-helly";
    case RejectionStage::FinalVerificationFailed: return "final-verification-failed";
  }
  return "unknown";
}

}  // namespace sqroot
