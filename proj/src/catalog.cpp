#include "cylrig/catalog.hpp"

#include <set>
#include <sstream>

#include "cylrig/error.hpp"
#include "cylrig/sparsity.hpp"

namespace cylrig {

namespace {

struct RawEntry {
  const char* key;
  const char* family;
  const char* name;
  int n;
  const char* edges;  // two-digit tokens, vertices 1..n
  const char* swaps;  // two-digit tokens: pairs exchanged by the involution
  const char* red;    // red tree of the two-tree coloring
};

// Colorings follow the drawn decompositions of the base graphs. The C2 K4
// coloring is relabelled to the (12)(34) action used here.
const RawEntry kRaw[] = {
    {"Ci/F1", "Ci", "F1", 6, "12 13 14 23 24 35 36 45 46 56", "16 25 34",
     "13 24 36 45 56"},
    {"Ci/F2", "Ci", "F2-crossed", 8, "12 13 14 23 24 35 34 46 56 57 58 67 68 78",
     "18 27 36 45", "14 23 34 46 57 68 78"},
    {"C2/K4", "C2", "K4", 4, "12 13 14 23 24 34", "12 34", "12 14 23"},
    {"C2/W5", "C2", "W5", 5, "12 13 24 34 15 25 35 45", "14 23", "13 24 15 45"},
    {"C2/Wd42", "C2", "Wd(4,2)", 7, "12 13 23 45 46 56 17 27 37 47 57 67",
     "16 25 34", "12 56 17 37 47 67"},
    {"C2/F2", "C2", "F2-parallel", 8, "12 13 14 23 24 36 34 45 56 57 58 67 68 78",
     "18 27 36 45", "14 23 34 45 56 58 67"},
    {"Cs/F2", "Cs", "F2", 8, "12 13 24 36 57 68 78 14 23 34 45 56 58 67",
     "17 28 35 46", "14 57 78 23 34 45 68"},
    {"Cs/Wd42", "Cs", "Wd(4,2)", 7, "13 23 45 46 27 57 12 56 17 37 47 67",
     "16 24 35", "23 46 56 17 37 47"},
    {"Cs/K34", "Cs", "K34", 7, "13 14 15 23 24 25 46 47 56 57 36 37", "16 27",
     "15 23 46 47 57 36"},
    {"Cs/F1tf", "Cs", "F1-two-fixed", 6, "12 13 14 23 24 35 46 45 36 56", "15 26",
     "14 23 35 46 56"},
    {"Cs/F1nf", "Cs", "F1-no-fixed", 6, "12 13 14 15 23 26 36 45 46 56",
     "16 24 35", "13 26 36 45 46"},
    {"Cs/W5", "Cs", "W5", 5, "12 13 15 23 24 35 34 45", "14 25", "12 15 35 34"},
};

std::vector<std::pair<int, int>> tokens(const char* s) {
  std::vector<std::pair<int, int>> out;
  std::istringstream in(s);
  std::string t;
  while (in >> t) out.push_back({t[0] - '1', t[1] - '1'});
  return out;
}

GroupName family_group(const std::string& family) {
  if (family == "Ci") return GroupName::Ci;
  if (family == "C2") return GroupName::C2;
  return GroupName::Cs_axial;
}

CatalogEntry build(const RawEntry& raw) {
  std::vector<std::string> ids;
  for (int i = 1; i <= raw.n; ++i) ids.push_back(std::to_string(i));
  std::vector<Edge> edges;
  for (auto [a, b] : tokens(raw.edges)) edges.push_back({a, b});
  std::vector<int> perm(raw.n);
  for (int i = 0; i < raw.n; ++i) perm[i] = i;
  for (auto [a, b] : tokens(raw.swaps)) {
    perm[a] = b;
    perm[b] = a;
  }
  CatalogEntry e{raw.key, raw.family, raw.name,
                 SymmetricGraph(GroupSpec::make(family_group(raw.family)), ids, edges,
                                {perm}),
                 {}};
  e.coloring.red.assign(e.graph.m(), 0);
  for (auto [a, b] : tokens(raw.red)) {
    int idx = e.graph.edge_index(a, b);
    if (idx < 0) throw InternalError(std::string("catalog coloring names a non-edge in ") + raw.key);
    e.coloring.red[idx] = 1;
  }
  return e;
}

void self_check(const CatalogEntry& e) {
  auto v = validate(e.graph);
  if (!v.ok) throw InternalError("catalog entry " + e.key + ": " + v.violations.front());
  auto gt = gamma_tight(e.graph);
  if (!gt.gamma_tight) throw InternalError("catalog entry " + e.key + " is not gamma-tight");
  if (!verify_decomposition(e.graph, e.coloring)) {
    throw InternalError("catalog entry " + e.key + " has a bad two-tree coloring");
  }
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const RawEntry& r : kRaw) {
      out.push_back(build(r));
      self_check(out.back());
    }
    return out;
  }();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& key) {
  for (const auto& e : catalog()) {
    if (e.key == key) return e;
  }
  throw InputError("unknown base graph '" + key + "'");
}

std::vector<const CatalogEntry*> catalog_for(GroupName group) {
  std::string fam = GroupSpec::make(group).family();
  std::vector<const CatalogEntry*> out;
  for (const auto& e : catalog()) {
    if (e.family == fam) out.push_back(&e);
  }
  return out;
}

SymmetricGraph instantiate(const CatalogEntry& e, GroupName group) {
  if (GroupSpec::make(group).family() != e.family) {
    throw InputError("base graph " + e.key + " does not belong to group " +
                     group_name_str(group));
  }
  if (group == e.graph.group().name) return e.graph;
  return with_group(e.graph, group);
}

std::vector<Embedding> find_pattern(const SymmetricGraph& host, const CatalogEntry& e,
                                    size_t limit) {
  if (host.group().family() != e.family) return {};
  return equivariant_isomorphisms(instantiate(e, host.group().name), host, limit);
}

}  // namespace cylrig
