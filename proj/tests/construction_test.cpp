#include "doctest.h"

#include "cylrig/catalog.hpp"
#include "cylrig/construction.hpp"
#include "cylrig/generate.hpp"
#include "cylrig/geometry.hpp"
#include "cylrig/pattern.hpp"
#include "cylrig/sparsity.hpp"
#include "helpers.hpp"

using namespace cylrig;
using namespace cylrig::test;

namespace {

SymmetricGraph f1_ci() { return catalog_entry("Ci/F1").graph; }

Certificate relabelled_f1(const std::string& prefix) {
  Certificate c;
  c.group = GroupName::Ci;
  c.base = "Ci/F1";
  for (const auto& id : ids(6)) c.labels[id] = prefix + id;
  return c;
}

}  // namespace

TEST_CASE("forward operations") {
  SUBCASE("Sym0Ext on F1") {
    SymmetricGraph g = apply_step(f1_ci(), Sym0Ext{"v", "w", {"1", "2"}});
    CHECK(g.n() == 8);
    CHECK(g.m() == 14);
    CHECK(gamma_tight(g).gamma_tight);
    CHECK(g.mate(g.index_or_throw("v")) == g.index_or_throw("w"));
  }
  SUBCASE("Double1Ext on K4 across the fixed edge") {
    SymmetricGraph g = apply_step(catalog_entry("C2/K4").graph,
                                  Double1Ext{{"1", "2"}, "w", "x", "3"});
    CHECK(g.n() == 6);
    CHECK(g.m() == 10);
    CHECK(fixed_elements(g, 1).edges.size() == 2);
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK(gamma_tight(g).gamma_tight);
  }
  SUBCASE("JoinTwoEdges of two F1 copies") {
    Certificate other = relabelled_f1("b");
    SymmetricGraph g = apply_step(f1_ci(), JoinTwoEdges{
                                               std::make_shared<Certificate>(other), {"1", "b1"}});
    CHECK(g.n() == 12);
    CHECK(g.m() == 22);
    CHECK(gamma_tight(g).gamma_tight);
  }
  SUBCASE("Sym1Ext") {
    SymmetricGraph g = apply_step(f1_ci(), Sym1Ext{"v", "w", {"1", "2"}, "5"});
    CHECK(g.n() == 8);
    CHECK(g.m() == 14);
    CHECK_FALSE(g.has_edge(g.index_or_throw("1"), g.index_or_throw("2")));
    CHECK(gamma_tight(g).gamma_tight);
  }
  SUBCASE("FixedVertex0Ext needs Cs") {
    CHECK_THROWS_AS(apply_step(f1_ci(), FixedVertex0Ext{"v", {"1", "6"}}), InputError);
    SymmetricGraph cs = catalog_entry("Cs/K34").graph;
    int a = cs.index_or_throw("1");
    std::string img = cs.id(cs.mate(a));
    REQUIRE(img != "1");
    SymmetricGraph g = apply_step(cs, FixedVertex0Ext{"v", {"1", img}});
    CHECK(g.mate(g.index_or_throw("v")) == g.index_or_throw("v"));
    CHECK(gamma_tight(g).gamma_tight);
  }
  SUBCASE("bad parameters") {
    CHECK_THROWS_AS(apply_step(f1_ci(), Sym0Ext{"v", "w", {"1", "99"}}), InputError);
    CHECK_THROWS_AS(apply_step(f1_ci(), Sym0Ext{"1", "w", {"2", "3"}}), InputError);
    CHECK_THROWS_AS(apply_step(f1_ci(), Sym1Ext{"v", "w", {"1", "6"}, "2"}), InputError);
    CHECK_THROWS_AS(apply_step(catalog_entry("C2/K4").graph,
                               Double1Ext{{"1", "3"}, "w", "x", "2"}),
                    InputError);
  }
  SUBCASE("C2v is refused") {
    SymmetricGraph g = SymmetricGraph::from_ids(
        GroupSpec::make(GroupName::C2v), ids(4), pairs(K4),
        {involution(4, "12 34"), involution(4, "13 24"), involution(4, "14 23")});
    CHECK_THROWS_WITH_AS(apply_step(g, Sym0Ext{"v", "w", {"1", "2"}}),
                         "necessary conditions only; see characters", InputError);
  }
}

TEST_CASE("single reductions") {
  SUBCASE("degree-two pair comes back off") {
    SymmetricGraph g = apply_step(f1_ci(), Sym0Ext{"v", "w", {"1", "2"}});
    Reduction r = reduce_once(g);
    REQUIRE_FALSE(r.is_base);
    REQUIRE(r.step.has_value());
    CHECK(std::holds_alternative<Sym0Ext>(*r.step));
    CHECK(same_labeled(*r.reduced, f1_ci()));
  }
  SUBCASE("Wd(4,2) under C2 is a base graph") {
    Reduction r = reduce_once(catalog_entry("C2/Wd42").graph);
    CHECK(r.is_base);
    CHECK(r.base == "C2/Wd42");
  }
  SUBCASE("two joined F1 copies split at the separating pair") {
    SymmetricGraph g = apply_step(f1_ci(), JoinTwoEdges{std::make_shared<Certificate>(
                                                            relabelled_f1("b")),
                                                        {"1", "b1"}});
    Reduction r = reduce_once(g);
    REQUIRE(r.step.has_value());
    CHECK(std::holds_alternative<JoinTwoEdges>(*r.step));
    REQUIRE(r.nested.has_value());
    CHECK(r.nested->n() == 6);
    CHECK(r.reduced->n() == 6);
  }
  SUBCASE("non-tight input") {
    CHECK_THROWS_AS(reduce_once(make(GroupName::C2, 5, K5, "12 34")), NotTight);
  }
}

TEST_CASE("certificates") {
  SUBCASE("F2 certifies as itself") {
    Certificate c = certify(catalog_entry("Ci/F2").graph);
    CHECK(c.base == "Ci/F2");
    CHECK(c.steps.empty());
  }
  SUBCASE("K5 is not tight") {
    SymmetricGraph k5 = make(GroupName::C2, 5, K5, "12 34");
    try {
      certify(k5);
      FAIL("expected NotTight");
    } catch (const NotTight& e) {
      REQUIRE(e.report().sparsity.witness.has_value());
      CHECK(e.report().sparsity.witness->size() == 5);
    }
  }
  SUBCASE("empty certificate replays to its base") {
    Certificate c;
    c.group = GroupName::Ci;
    c.base = "Ci/F1";
    CHECK(same_labeled(replay(c), f1_ci()));
    CHECK(verify_certificate(f1_ci(), c));
  }
  SUBCASE("tampered certificate is rejected") {
    Generator gen(GroupName::Ci, 3);
    Generator::Built b = gen.random_tight(12, 16);
    Certificate c = certify(b.graph);
    REQUIRE(verify_certificate(b.graph, c));
    bool tampered = false;
    for (auto& s : c.steps) {
      if (auto* z = std::get_if<Sym0Ext>(&s)) {
        z->neighbors[1] = z->neighbors[0];
        tampered = true;
        break;
      }
      if (auto* z = std::get_if<Sym1Ext>(&s)) {
        z->third = z->edge.first;
        tampered = true;
        break;
      }
    }
    if (!tampered) c.steps.push_back(Sym0Ext{"t1", "t2", {c.labels.begin()->second,
                                                            c.labels.begin()->second}});
    CHECK_FALSE(verify_certificate(b.graph, c));
  }
  SUBCASE("a certified graph of 40 vertices grown from W5 replays to itself") {
    Generator gen(GroupName::C2, 21);
    Generator::Built b = gen.random_tight(36, 40);
    Certificate c = certify(b.graph);
    CHECK(verify_certificate(b.graph, c));
    CHECK(certificate_size(c) == b.graph.n());
  }
}

TEST_CASE("every variant keeps its group tight") {
  for (GroupName gn : {GroupName::Ci, GroupName::C2, GroupName::Cs_axial,
                       GroupName::Cs_horizontal}) {
    Generator gen(gn, 5);
    for (StepKind k : step_kinds_for(gn)) {
      int applied = 0;
      for (int trial = 0; trial < 8 && applied < 3; ++trial) {
        Generator::Built b = gen.random_tight(8, 14);
        auto step = gen.random_step(b.graph, k);
        if (!step) continue;
        SymmetricGraph h = apply_step(b.graph, *step);
        CAPTURE(group_name_str(gn));
        CAPTURE(step_kind_name(k));
        CHECK(gamma_tight(h).gamma_tight);
        CHECK(verify_certificate(h, certify(h)));
        ++applied;
      }
      CHECK(applied > 0);
    }
  }
}

TEST_CASE("fixed-vertex variants") {
  SUBCASE("C2 K4 pair at the fixed hub of Wd(4,2) gives Wd(4,4)") {
    SymmetricGraph wd = catalog_entry("C2/Wd42").graph;
    int hub = fixed_elements(wd, 1).vertices.at(0);
    std::string w = wd.id(hub);
    VertexToK4 s;
    s.split = w;
    s.added = {"a", "b", "c"};
    s.images = std::array<std::string, 3>{"d", "e", "f"};
    for (int y : wd.neighbors(hub)) s.attach[wd.id(y)] = w;
    SymmetricGraph g = apply_step(wd, s);
    CHECK(g.n() == 13);
    CHECK(g.m() == 24);
    CHECK(gamma_tight(g).gamma_tight);
    CHECK(graph_is_gamma_isostatic(g, 0).isostatic);
  }
  SUBCASE("a new pair at a fixed vertex under Cs") {
    SymmetricGraph w5 = catalog_entry("Cs/W5").graph;
    std::vector<int> fixed = fixed_elements(w5, 1).vertices;
    REQUIRE_FALSE(fixed.empty());
    Generator gen(GroupName::Cs_axial, 8);
    bool found = false;
    for (int trial = 0; trial < 40 && !found; ++trial) {
      auto step = gen.random_step(w5, StepKind::VertexToC4);
      if (!step) continue;
      const auto& c4 = std::get<VertexToC4>(*step);
      int w = w5.index_or_throw(c4.split);
      if (w5.mate(w) != w || !c4.image) continue;
      found = true;
      SymmetricGraph g = apply_step(w5, *step);
      CHECK(g.n() == 7);
      CHECK(gamma_tight(g).gamma_tight);
    }
    CHECK(found);
  }
}
