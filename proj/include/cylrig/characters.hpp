#pragma once

#include <string>
#include <vector>

#include "cylrig/graph.hpp"

namespace cylrig {

// Per group element (group order) integer traces.
struct CharacterRows {
  std::vector<std::string> labels;
  std::vector<int> edge;      // chi(P~_E) = fixed edges + fixed vertices
  std::vector<int> external;  // chi(tau x P_V)
  std::vector<int> trivial;   // chi of the trivial-motion subrepresentation
};

// Trivial-motion character of one op: id 2, c_n 2, c2' -2, the rest 0.
int trivial_character(const SymmetryOp& op);

// Throws InternalError if the first-principles values disagree with the
// closed forms of the character table.
CharacterRows character_rows(const SymmetricGraph& g);

struct NecessaryVerdict {
  bool pass = false;
  bool necessary_only = false;  // set for C2v/C2h
  bool count_ok = false;        // |E| = 2|V| - 2
  bool fixed_counts_ok = false;
  // external - trivial - edge, per element; zero everywhere on success
  std::vector<int> residuals;
  std::vector<std::string> failures;
};

NecessaryVerdict necessary_conditions(const SymmetricGraph& g);

}  // namespace cylrig
