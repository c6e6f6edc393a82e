#include "doctest.h"

#include "cylrig/catalog.hpp"
#include "cylrig/construction.hpp"
#include "cylrig/generate.hpp"
#include "cylrig/trees.hpp"
#include "helpers.hpp"

using namespace cylrig;
using namespace cylrig::test;

namespace {

int count_red(const TwoTreeColoring& c) {
  int k = 0;
  for (char r : c.red) k += r ? 1 : 0;
  return k;
}

}  // namespace

TEST_CASE("catalog colorings") {
  for (const CatalogEntry& e : catalog()) {
    CAPTURE(e.key);
    CHECK(verify_decomposition(e.graph, e.coloring));
    CHECK(count_red(e.coloring) == e.graph.n() - 1);
  }
}

TEST_CASE("K4 under C2 splits into two invariant trees") {
  const CatalogEntry& e = catalog_entry("C2/K4");
  TwoTreeColoring c = decompose(e.graph, certify(e.graph));
  REQUIRE(verify_decomposition(e.graph, c));
  for (int k = 0; k < e.graph.m(); ++k) CHECK(c.red[e.graph.edge_image(1, k)] == c.red[k]);
}

TEST_CASE("F1 under Ci splits into two swapped trees") {
  const CatalogEntry& e = catalog_entry("Ci/F1");
  TwoTreeColoring c = decompose(e.graph, certify(e.graph));
  REQUIRE(verify_decomposition(e.graph, c));
  for (int k = 0; k < e.graph.m(); ++k) CHECK(c.red[e.graph.edge_image(1, k)] != c.red[k]);
}

TEST_CASE("a symmetrised 0-extension colours the new edges one of each") {
  SymmetricGraph g = apply_step(catalog_entry("Ci/F1").graph, Sym0Ext{"v", "w", {"1", "2"}});
  Certificate c = certify(g);
  TwoTreeColoring col = decompose(g, c);
  REQUIRE(verify_decomposition(g, col));
  int v = g.index_or_throw("v");
  std::vector<int> colours;
  for (int y : g.neighbors(v)) colours.push_back(col.red[g.edge_index(v, y)]);
  REQUIRE(colours.size() == 2);
  CHECK(colours[0] != colours[1]);
}

TEST_CASE("verification rejects bad colorings") {
  const CatalogEntry& e = catalog_entry("C2/K4");
  TwoTreeColoring all_red{std::vector<char>(6, 1)};
  CHECK_FALSE(verify_decomposition(e.graph, all_red));

  // Flipping one orbit of an invariant decomposition breaks a tree.
  TwoTreeColoring c = e.coloring;
  for (int k = 0; k < e.graph.m(); ++k) {
    int j = e.graph.edge_image(1, k);
    if (j != k) {
      c.red[k] = !c.red[k];
      c.red[j] = !c.red[j];
      break;
    }
  }
  CHECK_FALSE(verify_decomposition(e.graph, c));

  // Same trees, no symmetry asked of the trivial group.
  const SymmetricGraph& f1 = catalog_entry("Ci/F1").graph;
  SymmetricGraph plainf1(GroupSpec::make(GroupName::trivial), f1.ids(), f1.edges(), {});
  CHECK(verify_decomposition(plainf1, catalog_entry("Ci/F1").coloring));
}

TEST_CASE("propagation over random certificates") {
  for (GroupName gn : {GroupName::Ci, GroupName::C2, GroupName::Cs_axial,
                       GroupName::Cs_horizontal}) {
    Generator gen(gn, 13);
    for (int i = 0; i < 6; ++i) {
      Generator::Built b = gen.random_tight(10, 24);
      DecomposeLog log;
      TwoTreeColoring c = decompose(b.graph, certify(b.graph), &log);
      CAPTURE(group_name_str(gn));
      CHECK(verify_decomposition(b.graph, c));
      CHECK(count_red(c) == b.graph.n() - 1);
    }
  }
}

TEST_CASE("direct search without a certificate") {
  for (const char* key : {"Ci/F2", "C2/Wd42", "Cs/K34", "C2/F2"}) {
    const SymmetricGraph& g = catalog_entry(key).graph;
    auto c = search_decomposition(g);
    CAPTURE(key);
    REQUIRE(c.has_value());
    CHECK(verify_decomposition(g, *c));
  }
  // K5 minus two edges has too few edges for two spanning trees.
  CHECK_FALSE(search_decomposition(plain(5, "12 13 14 15 23 24 25")).has_value());
}
