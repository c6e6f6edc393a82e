#include "doctest.h"

#include <random>

#include "cylrig/catalog.hpp"
#include "cylrig/error.hpp"
#include "cylrig/sparsity.hpp"
#include "helpers.hpp"

using namespace cylrig;
using namespace cylrig::test;

namespace {

SymmetricGraph random_plain(std::mt19937_64& rng, int n, int m) {
  std::vector<std::pair<int, int>> all;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all.push_back({i, j});
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min<size_t>(all.size(), m));
  std::vector<Edge> es;
  for (auto [a, b] : all) es.push_back({a, b});
  return SymmetricGraph(GroupSpec::make(GroupName::trivial), ids(n), es, {});
}

}  // namespace

TEST_CASE("check_22 on small graphs") {
  SparsityReport k4 = check_22(plain(4, K4));
  CHECK(k4.sparse);
  CHECK(k4.tight);

  SparsityReport k5 = check_22(plain(5, K5));
  CHECK_FALSE(k5.sparse);
  REQUIRE(k5.witness.has_value());
  CHECK(k5.witness->size() == 5);

  CHECK(check_22(plain(8, F2_CROSSED)).tight);
  CHECK(check_22(plain(6, F1)).tight);
}

TEST_CASE("brute force agrees on the named graphs") {
  for (const char* edges : {K4, K5}) {
    SymmetricGraph g = plain(edges == K4 ? 4 : 5, edges);
    CHECK(check_22(g).sparse == brute_force_sparse(g).sparse);
    CHECK(check_22(g).tight == brute_force_sparse(g).tight);
  }
  SymmetricGraph f1 = plain(6, F1), f2 = plain(8, F2_CROSSED);
  CHECK(brute_force_sparse(f1).tight);
  CHECK(brute_force_sparse(f2).tight);

  SparsityReport edge = brute_force_sparse(plain(2, "12"));
  CHECK(edge.sparse);
  CHECK_FALSE(edge.tight);
  CHECK(brute_force_sparse(plain(2, "")).sparse);
}

TEST_CASE("pebble game against brute force") {
  std::mt19937_64 rng(7);
  int disagreements = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    int m = static_cast<int>(rng() % (2 * n + 1));
    SymmetricGraph g = random_plain(rng, n, m);
    SparsityReport a = check_22(g), b = brute_force_sparse(g);
    if (a.sparse != b.sparse || a.tight != b.tight) ++disagreements;
    if (!a.sparse) {
      REQUIRE(a.witness.has_value());
      int k = static_cast<int>(a.witness->size());
      CHECK(induced_edges(g, *a.witness) >= 2 * k - 1);
    }
  }
  CHECK(disagreements == 0);
}

TEST_CASE("pebble accounting") {
  PebbleGame pg = run_pebble_game(plain(5, K5));
  CHECK(pg.accepted() == 8);
  int total = 0;
  for (int v = 0; v < pg.n(); ++v) {
    CHECK(pg.pebbles(v) <= 2);
    total += pg.pebbles(v);
  }
  CHECK(total + pg.accepted() == 10);
  CHECK(pg.free_pebbles() == 2);
}

TEST_CASE("addable") {
  SymmetricGraph k4me = plain(4, "13 14 23 24 34");
  CHECK(addable(k4me, 0, 1));
  CHECK_THROWS_AS(addable(plain(4, K4), 0, 1), InputError);
  CHECK(addable(plain(5, K4), 4, 0));
  CHECK_FALSE(addable(plain(5, "12 13 14 23 24 34 15 25"), 2, 4));

  SymmetricGraph remnant = plain(4, "12 13 14 23 24");
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (remnant.has_edge(i, j)) continue;
      SymmetricGraph plus = plain(4, std::string("12 13 14 23 24 ") +
                                         std::to_string(i + 1) + std::to_string(j + 1));
      CHECK(addable(remnant, i, j) == check_22(plus).sparse);
    }
  }
}

TEST_CASE("addable_pair matches the pebble game on the extended graph") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 4 + static_cast<int>(rng() % 5);
    SymmetricGraph g = random_plain(rng, n, static_cast<int>(rng() % (2 * n - 3)));
    std::vector<Edge> non;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!g.has_edge(i, j)) non.push_back({i, j});
    if (non.size() < 2) continue;
    std::shuffle(non.begin(), non.end(), rng);
    std::vector<Edge> es = g.edges();
    es.push_back(non[0]);
    es.push_back(non[1]);
    SymmetricGraph plus(GroupSpec::make(GroupName::trivial), g.ids(), es, {});
    CHECK(addable_pair(g, non[0], non[1]) == check_22(plus).sparse);
  }
  // Each edge fits alone but the whole graph is 2-critical after one of them.
  SymmetricGraph g = plain(5, "13 14 23 24 34 35 45");
  CHECK(addable(g, 0, 1));
  CHECK(addable(g, 0, 4));
  CHECK_FALSE(addable_pair(g, {0, 1}, {0, 4}));
}

TEST_CASE("gamma_tight") {
  SUBCASE("F1 with Ci") {
    GammaTightReport r = gamma_tight(make(GroupName::Ci, 6, F1, "16 25 34"));
    CHECK(r.gamma_tight);
    REQUIRE(r.counts.size() == 1);
    CHECK(r.counts[0].fixed_edges == 0);
  }
  SUBCASE("K4 with C2 (12)(34)") {
    GammaTightReport r = gamma_tight(make(GroupName::C2, 4, K4, "12 34"));
    CHECK(r.gamma_tight);
    CHECK(r.counts[0].fixed_edges == 2);
    CHECK(r.counts[0].fixed_vertices == 0);
  }
  SUBCASE("F2-parallel under an inversion has fixed edges") {
    SymmetricGraph g = with_group(catalog_entry("C2/F2").graph, GroupName::Ci);
    GammaTightReport r = gamma_tight(g);
    CHECK_FALSE(r.gamma_tight);
    CHECK_FALSE(r.reasons.empty());
  }
  SUBCASE("tight but one fixed vertex and two fixed edges under C2") {
    // K4 with 1, 2 fixed and 3<->4: fixed edges 12 and 34.
    CHECK_FALSE(gamma_tight(make(GroupName::C2, 4, K4, "34")).gamma_tight);
  }
  SUBCASE("F1 under a half-turn plus a fixed degree-two vertex") {
    // Globally balanced (one fixed vertex, no fixed edge) but F1 is an
    // invariant tight set missing the fixed vertex.
    SymmetricGraph g = make(GroupName::C2, 7, std::string(F1) + " 71 76", "16 25 34");
    REQUIRE(validate(g).ok);
    REQUIRE(check_22(g).tight);
    GammaTightReport r = gamma_tight(g);
    CHECK_FALSE(r.gamma_tight);
    CHECK(unbalanced_invariant_tight_set(g, 1).has_value());
  }
  SUBCASE("C2v gives a necessary-only verdict") {
    // sigma (12)(34), sigma_p (13)(24), c2p (14)(23)
    SymmetricGraph g = SymmetricGraph::from_ids(
        GroupSpec::make(GroupName::C2v), ids(4), pairs(K4),
        {involution(4, "12 34"), involution(4, "13 24"), involution(4, "14 23")});
    REQUIRE(validate(g).ok);
    GammaTightReport r = gamma_tight(g);
    CHECK(r.necessary_only);
    CHECK(r.counts.size() == 3);
  }
  SUBCASE("C2z is not characterized") {
    CHECK_THROWS_AS(gamma_tight(make(GroupName::C2z, 6, F1, "16 25 34")), InputError);
  }
  SUBCASE("relabelling by an automorphism keeps the verdict") {
    SymmetricGraph a = make(GroupName::Ci, 6, F1, "16 25 34");
    SymmetricGraph b = make(GroupName::Ci, 6, "65 64 63 54 53 42 41 32 31 21", "61 52 43");
    CHECK(gamma_tight(a).gamma_tight == gamma_tight(b).gamma_tight);
  }
}

TEST_CASE("min tight superset") {
  SymmetricGraph f2 = plain(8, F2_CROSSED);
  std::vector<int> s = min_tight_superset(f2, {0, 1});
  CHECK(s.size() == 4);
  CHECK(induced_edges(f2, s) == 6);
  CHECK(min_tight_superset(f2, {0, 7}).size() == 8);
}
