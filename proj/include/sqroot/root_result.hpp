#pragma once

#include "sqroot/graph.hpp"
#include "sqroot/recognizers.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace sqroot {

enum class RejectionStage {
  NotConnected,
  NotChordal,
  AssignmentInfeasible,
  TooManyCliques,
  IntersectionCondition,
  NotHereditaryCliqueHelly,
  FinalVerificationFailed,
};

std::string_view to_string(RejectionStage stage);

// Clique C of the constructed split root and the representatives c_1..c_q,
// one per maximal clique Q_i of the input.
struct SplitRootCertificate {
  std::vector<Vertex> clique;
  std::vector<Vertex> representatives;
};

struct RootResult {
  std::optional<Graph> root;  // set iff a root was found
  std::optional<RejectionStage> stage;

  // Certificates, re-checked on the returned root.
  bool square_matches = false;
  bool in_class = false;

  // Metadata about the shape of a ptolemaic root.
  bool root_is_tree = false;
  bool root_is_block_graph = false;

  std::optional<SplitRootCertificate> split;
  std::optional<ForbiddenPattern> witness;  // obstruction behind a rejection, when one is known

  bool found() const { return root.has_value(); }
  std::size_t edges() const { return root ? root->edge_count() : 0; }

  static RootResult rejected(RejectionStage stage) {
    RootResult r;
    r.stage = stage;
    return r;
  }
};

}  // namespace sqroot
