#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cylrig/graph.hpp"

namespace cylrig::test {

// "12 13 24" -> {{"1","2"}, {"1","3"}, {"2","4"}} for single-digit ids.
inline std::vector<IdPair> pairs(const std::string& s) {
  std::vector<IdPair> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back({tok.substr(0, 1), tok.substr(1, 1)});
  return out;
}

inline std::vector<std::string> ids(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back(std::to_string(i));
  return v;
}

// Involution from cycle notation "16 25 34"; unlisted vertices are fixed.
inline std::map<std::string, std::string> involution(int n, const std::string& cycles) {
  std::map<std::string, std::string> m;
  for (const auto& id : ids(n)) m[id] = id;
  for (const auto& [a, b] : pairs(cycles)) {
    m[a] = b;
    m[b] = a;
  }
  return m;
}

inline SymmetricGraph make(GroupName group, int n, const std::string& edges,
                           const std::string& cycles = "") {
  GroupSpec spec = GroupSpec::make(group);
  std::vector<std::map<std::string, std::string>> action;
  if (spec.order() == 2) action.push_back(involution(n, cycles));
  return SymmetricGraph::from_ids(spec, ids(n), pairs(edges), action);
}

inline SymmetricGraph plain(int n, const std::string& edges) {
  return make(GroupName::trivial, n, edges);
}

inline const char* const K4 = "12 13 14 23 24 34";
inline const char* const K5 = "12 13 14 15 23 24 25 34 35 45";
inline const char* const F1 = "12 13 14 23 24 35 36 45 46 56";
inline const char* const F2_CROSSED = "12 13 14 23 24 35 34 46 56 57 58 67 68 78";

}  // namespace cylrig::test
