#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cylrig/group.hpp"

namespace cylrig {

struct Edge {
  int u = 0;
  int v = 0;
  bool operator==(const Edge&) const = default;
};

using IdPair = std::pair<std::string, std::string>;

// A finite graph with a group acting on it. Loops and repeated edges are
// stored as given so that validate() can report them; every other algorithm
// expects a graph that validates.
class SymmetricGraph {
 public:
  SymmetricGraph();
  // `perms` holds one permutation per non-identity group element, in the
  // group's element order. Throws InputError on malformed permutations.
  SymmetricGraph(GroupSpec group, std::vector<std::string> ids,
                 std::vector<Edge> edges, std::vector<std::vector<int>> perms);

  // Same, keyed by vertex ids. Each action map must cover every vertex.
  static SymmetricGraph from_ids(
      GroupSpec group, std::vector<std::string> ids,
      const std::vector<IdPair>& edges,
      const std::vector<std::map<std::string, std::string>>& action);

  int n() const { return static_cast<int>(ids_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(int v) const { return ids_[v]; }
  std::optional<int> index(const std::string& id) const;
  int index_or_throw(const std::string& id) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
  int edge_index(int u, int v) const;

  const GroupSpec& group() const { return group_; }
  // element 0 is the identity
  int image(int element, int v) const { return perms_[element][v]; }
  const std::vector<int>& perm(int element) const { return perms_[element]; }
  // Image under the single non-identity element of an order-2 group.
  int mate(int v) const { return perms_[1][v]; }
  // Index of the image of edge e under the element, or -1 if not an edge.
  int edge_image(int element, int e) const;

  IdPair edge_ids(int e) const { return {ids_[edges_[e].u], ids_[edges_[e].v]}; }

 private:
  static std::uint64_t key(int u, int v);

  GroupSpec group_;
  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::unordered_map<std::uint64_t, int> edge_lookup_;
  std::vector<std::vector<int>> perms_;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

ValidationReport validate(const SymmetricGraph& g);

struct FixedElements {
  std::vector<int> vertices;
  std::vector<int> edges;  // edge indices
};

// Fixed vertices and edges (endpoints fixed or swapped) of one group element.
FixedElements fixed_elements(const SymmetricGraph& g, int element);
FixedElements fixed_elements(const SymmetricGraph& g, const SymmetryOp& op);

struct Orbits {
  std::vector<std::vector<int>> vertex_orbits;
  std::vector<std::vector<int>> edge_orbits;  // edge indices
};

Orbits orbits(const SymmetricGraph& g);

// Same vertex ids, edge set and action, ignoring vertex and edge order.
bool same_labeled(const SymmetricGraph& a, const SymmetricGraph& b);

// Subgraph induced on an action-invariant vertex set, keeping vertex order.
SymmetricGraph induced_subgraph(const SymmetricGraph& g,
                                const std::vector<int>& vertices);

// The same combinatorics under another group with matching element count.
SymmetricGraph with_group(const SymmetricGraph& g, GroupName name);

// Sort helper: numeric ids compare numerically, others lexicographically.
bool id_less(const std::string& a, const std::string& b);

}  // namespace cylrig
