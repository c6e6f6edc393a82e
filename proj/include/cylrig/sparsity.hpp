#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cylrig/graph.hpp"

namespace cylrig {

struct SparsityReport {
  bool sparse = true;
  bool tight = false;
  std::optional<std::vector<int>> witness;  // vertex indices, i(X) > 2|X| - 2
};

// (2,2) pebble game. Vertices start with two pebbles; an accepted edge is
// oriented away from the vertex whose pebble covers it.
class PebbleGame {
 public:
  explicit PebbleGame(int n);

  int n() const { return static_cast<int>(pebbles_.size()); }
  int pebbles(int v) const { return pebbles_[v]; }
  int accepted() const { return accepted_; }
  int free_pebbles() const { return 2 * n() - accepted_; }

  // Tries to insert uv; returns false (leaving the edge out) when it would
  // break (2,2)-sparsity.
  bool insert(int u, int v);
  // Gathers as many pebbles as possible on {u, v} and returns the count.
  int gather(int u, int v);
  // Vertices reachable from the given set along oriented edges.
  std::vector<int> reach(const std::vector<int>& from) const;
  // Smallest vertex set containing u and v spanning a tight subgraph of
  // the accepted edges, or nullopt when none exists.
  std::optional<std::vector<int>> min_tight_set(int u, int v);

 private:
  bool pull_pebble(int to, int protect);
  void reverse_edge(int from, int to);

  std::vector<int> pebbles_;
  std::vector<std::vector<int>> out_;
  int accepted_ = 0;
};

// Runs the pebble game over all edges of g in order.
PebbleGame run_pebble_game(const SymmetricGraph& g);

SparsityReport check_22(const SymmetricGraph& g);
SparsityReport brute_force_sparse(const SymmetricGraph& g);

// Whether g + uv is still (2,2)-sparse. Throws InputError if uv is an edge.
bool addable(const SymmetricGraph& g, int u, int v);
bool addable_pair(const SymmetricGraph& g, Edge e1, Edge e2);

// Number of edges with both ends in the set.
int induced_edges(const SymmetricGraph& g, const std::vector<int>& vertices);

struct FixedCounts {
  int fixed_vertices = 0;
  int fixed_edges = 0;
};

struct GammaTightReport {
  bool gamma_tight = false;
  bool necessary_only = false;  // C2v and C2h: only necessary conditions
  SparsityReport sparsity;
  std::vector<std::string> reasons;  // why it failed
  // per non-identity element, in group order
  std::vector<FixedCounts> counts;
};

// For a half-turn element of a tight graph with balanced counts: a proper
// invariant tight vertex set missing the fixed vertex or a fixed edge.
std::optional<std::vector<int>> unbalanced_invariant_tight_set(const SymmetricGraph& g,
                                                              int element);

// (2,2)-tightness plus the fixed-element constraints of the group. For
// half-turns the constraints also apply to every invariant tight subgraph.
GammaTightReport gamma_tight(const SymmetricGraph& g);

// Only the fixed-element part of gamma_tight. Appends reasons on failure.
bool fixed_count_conditions(const SymmetricGraph& g, std::vector<std::string>* reasons);

// Smallest tight vertex set of a tight graph containing all of `vertices`.
std::vector<int> min_tight_superset(const SymmetricGraph& g,
                                    const std::vector<int>& vertices);

}  // namespace cylrig
