#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cylrig/graph.hpp"

namespace cylrig {

struct Certificate;

// One flag per edge index: 1 = red, 0 = blue.
struct TwoTreeColoring {
  std::vector<char> red;
};

// Both classes are spanning trees; for C2 each class is invariant, for
// Ci/Cs the action swaps them. The trivial group has no symmetry condition.
bool verify_decomposition(const SymmetricGraph& g, const TwoTreeColoring& c);

struct DecomposeLog {
  int fallbacks = 0;
  std::vector<std::string> messages;
};

// Propagates the base graph coloring through the certificate steps.
TwoTreeColoring decompose(const SymmetricGraph& g, const Certificate& cert,
                          DecomposeLog* log = nullptr);

// Direct search without a certificate. Ci/Cs use matroid intersection
// (one edge per orbit, forest in the graphic matroid); C2 uses a pruned
// search over orbit colorings bounded by `node_limit`.
std::optional<TwoTreeColoring> search_decomposition(const SymmetricGraph& g,
                                                    long node_limit = 2'000'000);

}  // namespace cylrig
