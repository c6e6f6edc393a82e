#pragma once

#include <string>
#include <vector>

#include "cylrig/graph.hpp"
#include "cylrig/pattern.hpp"
#include "cylrig/trees.hpp"

namespace cylrig {

struct CatalogEntry {
  std::string key;      // "Ci/F1", "C2/Wd42", ...
  std::string family;   // Ci, C2 or Cs
  std::string name;     // display name
  SymmetricGraph graph; // Cs entries carry Cs_axial
  TwoTreeColoring coloring;
};

// Built and self-checked on first use. Throws InternalError if any entry
// fails validation, tightness or its coloring.
const std::vector<CatalogEntry>& catalog();

const CatalogEntry& catalog_entry(const std::string& key);

std::vector<const CatalogEntry*> catalog_for(GroupName group);

// The entry's graph under the requested group of its family.
SymmetricGraph instantiate(const CatalogEntry& e, GroupName group);

// Action-equivariant isomorphisms from the entry onto the host.
std::vector<Embedding> find_pattern(const SymmetricGraph& host, const CatalogEntry& e,
                                    size_t limit = 1);

}  // namespace cylrig
