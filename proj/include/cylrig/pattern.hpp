#pragma once

#include <optional>
#include <vector>

#include "cylrig/graph.hpp"

namespace cylrig {

// Pattern vertex index -> host vertex index.
using Embedding = std::vector<int>;

struct Pattern {
  int n = 0;
  std::vector<Edge> edges;

  static Pattern complete(int k);
};

// One embedding per distinct image subgraph (automorphic copies collapse).
std::vector<Embedding> find_subgraph(const SymmetricGraph& host, const Pattern& p);

std::vector<Embedding> find_k4(const SymmetricGraph& g);

// Copies of K4 minus the edge uv. Each embedding is [u, v, a, b] with a < b.
std::vector<Embedding> find_k4_minus_edge_through(const SymmetricGraph& g, int u,
                                                  int v);

// An isomorphism f: a -> b with f(g.v) = g.f(v) for every group element.
// Both graphs must carry groups with the same element order.
std::optional<std::vector<int>> equivariant_isomorphism(const SymmetricGraph& a,
                                                        const SymmetricGraph& b);

// All of them, up to `limit`.
std::vector<std::vector<int>> equivariant_isomorphisms(const SymmetricGraph& a,
                                                       const SymmetricGraph& b,
                                                       size_t limit);

}  // namespace cylrig
