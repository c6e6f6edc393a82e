#pragma once

// Mutable id-keyed graph with an involution, used while building and
// reducing graphs for the order-two groups.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cylrig/graph.hpp"

namespace cylrig {

struct Work {
  GroupSpec group;
  std::vector<std::string> order;
  std::map<std::string, std::set<std::string>> adj;
  std::map<std::string, std::string> mate;

  static Work from(const SymmetricGraph& g);
  SymmetricGraph build() const;

  bool has_vertex(const std::string& v) const { return adj.count(v) > 0; }
  bool has_edge(const std::string& a, const std::string& b) const;
  const std::string& img(const std::string& v) const;
  const std::set<std::string>& nbrs(const std::string& v) const;

  void add_vertex(const std::string& v);
  void add_edge(const std::string& a, const std::string& b);
  void remove_edge(const std::string& a, const std::string& b);
  void remove_vertex(const std::string& v);
};

}  // namespace cylrig
