#include "doctest.h"

#include "cylrig/catalog.hpp"
#include "cylrig/geometry.hpp"
#include "cylrig/linalg.hpp"
#include "helpers.hpp"

using namespace cylrig;
using namespace cylrig::test;

namespace {

CylPoint pt(mpq_class x, mpq_class y, mpq_class z) { return {x, y, z}; }

bool all_zero(const std::vector<mpq_class>& v) {
  for (const auto& q : v)
    if (q != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("isometries") {
  CHECK(apply_isometry(SymmetryOp::inversion(), pt(mpq_class(3, 5), mpq_class(4, 5), 7)) ==
        pt(mpq_class(-3, 5), mpq_class(-4, 5), -7));
  CHECK(apply_isometry(SymmetryOp::sigma_axial(), pt(1, 0, 2)) == pt(1, 0, 2));
  CHECK(apply_isometry(SymmetryOp::sigma_horizontal(), pt(0, 1, 2)) == pt(0, 1, -2));
  CHECK(apply_isometry(SymmetryOp::halfturn_perp(), pt(1, 0, 0)) == pt(1, 0, 0));
  CHECK(apply_isometry(SymmetryOp::halfturn_perp(), pt(0, 1, 3)) == pt(0, -1, -3));
  CylPoint p = cylinder_point(mpq_class(1, 2), 1);
  CHECK(p == pt(mpq_class(3, 5), mpq_class(4, 5), 1));
  CHECK(p.on_cylinder());
  CHECK(SymmetryOp::inversion().trace() == -3);
  CHECK(SymmetryOp::halfturn_perp().trace() == -1);
  CHECK_FALSE(SymmetryOp::rotation_z(2).has_cylinder_fixed_points());
  CHECK(SymmetryOp::sigma_horizontal().has_cylinder_fixed_points());
}

TEST_CASE("exact linear algebra") {
  CHECK(exact_rank(RationalMatrix(3, 3)) == 0);
  RationalMatrix m(3, 4);
  int vals[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 0, 1}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 4; ++c) m.at(r, c) = vals[r][c];
  m.at(0, 0) = mpq_class(1, 3);
  m.at(1, 0) = mpq_class(2, 3);
  CHECK(exact_rank(m) == 2);
  CHECK(bareiss_rank(m) == 2);
  CHECK(modular_rank(m) == 2);
  auto ker = kernel_basis(m);
  CHECK(ker.size() == 2);
  for (const auto& k : ker) CHECK(all_zero(m.multiply(k)));
}

TEST_CASE("realizations respect the action") {
  SUBCASE("K4 trivial") {
    Framework f = random_symmetric_realization(plain(4, K4), 3);
    for (int i = 0; i < 4; ++i) {
      CHECK(f.points[i].on_cylinder());
      for (int j = i + 1; j < 4; ++j) CHECK_FALSE(f.points[i] == f.points[j]);
    }
  }
  SUBCASE("F1 under inversion") {
    SymmetricGraph g = make(GroupName::Ci, 6, F1, "16 25 34");
    Framework f = random_symmetric_realization(g, 5);
    check_framework(f);
    for (int v = 0; v < 6; ++v) {
      const CylPoint& p = f.points[v];
      CHECK(f.points[g.mate(v)] == pt(-p.x, -p.y, -p.z));
    }
  }
  SUBCASE("W5 under the half-turn puts the hub at (1,0,0)") {
    const SymmetricGraph& g = catalog_entry("C2/W5").graph;
    Framework f = random_symmetric_realization(g, 0);
    int hub = g.index_or_throw("5");
    CHECK(f.points[hub] == pt(1, 0, 0));
  }
  SUBCASE("mirror-fixed vertices land on the mirror") {
    const SymmetricGraph& axial = catalog_entry("Cs/K34").graph;
    Framework f = random_symmetric_realization(axial, 1);
    for (int v : fixed_elements(axial, 1).vertices) CHECK(f.points[v].y == 0);
    SymmetricGraph horiz = with_group(axial, GroupName::Cs_horizontal);
    Framework h = random_symmetric_realization(horiz, 1);
    for (int v : fixed_elements(horiz, 1).vertices) CHECK(h.points[v].z == 0);
  }
  SUBCASE("three adjacent half-turn fixed vertices cannot be placed") {
    CHECK_THROWS_AS(random_symmetric_realization(make(GroupName::C2, 4, K4, ""), 0),
                    GeometryError);
  }
  SUBCASE("broken symmetry is rejected") {
    SymmetricGraph g = make(GroupName::Ci, 6, F1, "16 25 34");
    Framework f = random_symmetric_realization(g, 5);
    f.points[0].z += 1;
    CHECK_THROWS_AS(check_framework(f), GeometryError);
  }
}

TEST_CASE("rigidity matrix shape and entries") {
  Framework k4 = random_symmetric_realization(plain(4, K4), 2);
  RationalMatrix r = rigidity_matrix(k4);
  CHECK(r.rows() == 10);
  CHECK(r.cols() == 12);
  // edge 1-2: p1 - p2 in block 1, p2 - p1 in block 2
  CHECK(r.at(0, 0) == k4.points[0].x - k4.points[1].x);
  CHECK(r.at(0, 3) == k4.points[1].x - k4.points[0].x);
  CHECK(r.at(6, 0) == k4.points[0].x);
  CHECK(r.at(6, 2) == 0);

  SymmetricGraph single = plain(1, "");
  Framework one{single, {cylinder_point(2, 5)}};
  RationalMatrix s = rigidity_matrix(one);
  CHECK(s.rows() == 1);
  CHECK(s.cols() == 3);
  CHECK(s.at(0, 0) == one.points[0].x);
  CHECK(s.at(0, 1) == one.points[0].y);
  CHECK(s.at(0, 2) == 0);

  Framework f1 = random_symmetric_realization(make(GroupName::Ci, 6, F1, "16 25 34"), 9);
  RationalMatrix rf = rigidity_matrix(f1);
  CHECK(rf.rows() == 16);
  CHECK(rf.cols() == 18);
  CHECK(exact_rank(rf) == 16);
  CHECK(bareiss_rank(rf) == 16);
}

TEST_CASE("trivial motions") {
  Framework f = random_symmetric_realization(catalog_entry("Cs/F2").graph, 4);
  RationalMatrix r = rigidity_matrix(f);
  TrivialMotions tm = trivial_motion_basis(f);
  CHECK(all_zero(r.multiply(tm.t)));
  CHECK(all_zero(r.multiply(tm.r)));
  CHECK(rigidity_rank(f) <= 3 * f.graph.n() - 2);

  Framework one{plain(1, ""), {pt(mpq_class(3, 5), mpq_class(4, 5), 1)}};
  TrivialMotions t1 = trivial_motion_basis(one);
  CHECK(t1.r == MotionVector{mpq_class(-4, 5), mpq_class(3, 5), 0});
  CHECK(t1.t == MotionVector{0, 0, 1});
}

TEST_CASE("rigidity verdicts") {
  Framework k4 = random_symmetric_realization(plain(4, K4), 1);
  CHECK(rigidity_rank(k4) == 10);
  CHECK(is_isostatic(k4));

  Framework k4me = random_symmetric_realization(plain(4, "12 13 14 23 24"), 1);
  CHECK(is_independent(k4me));
  CHECK_FALSE(is_infinitesimally_rigid(k4me));
  CHECK(rigidity_rank(k4me) == 9);

  Framework k5 = random_symmetric_realization(plain(5, K5), 1);
  CHECK(is_infinitesimally_rigid(k5));
  CHECK_FALSE(is_independent(k5));
  CHECK(rigidity_rank(k5) == 13);
}

TEST_CASE("symmetric isostaticity") {
  IsostaticVerdict f1 = graph_is_gamma_isostatic(make(GroupName::Ci, 6, F1, "16 25 34"), 0);
  CHECK(f1.isostatic);
  CHECK(f1.max_rank == 16);

  IsostaticVerdict k4 = graph_is_gamma_isostatic(make(GroupName::C2, 4, K4, "12 34"), 0);
  CHECK(k4.isostatic);

  IsostaticVerdict c2z = graph_is_gamma_isostatic(make(GroupName::C2z, 6, F1, "16 25 34"), 0);
  CHECK_FALSE(c2z.isostatic);
  CHECK(c2z.probabilistic);
  CHECK(c2z.max_rank < 16);
  CHECK(c2z.attempts == 3);

  IsostaticVerdict wd = graph_is_gamma_isostatic(catalog_entry("C2/Wd42").graph, 0);
  CHECK(wd.isostatic);
  CHECK(wd.max_rank == 19);
  CHECK(wd.winning_seed == attempt_seed(0, 0));
}

TEST_CASE("equivariance of the rigidity matrix") {
  for (const char* key : {"Ci/F1", "C2/W5", "Cs/K34"}) {
    const SymmetricGraph& g = catalog_entry(key).graph;
    Framework f = random_symmetric_realization(g, 17);
    RationalMatrix r = rigidity_matrix(f);
    MotionVector u(3 * g.n());
    for (size_t i = 0; i < u.size(); ++i) {
      u[i] = mpq_class(static_cast<long>(i * 7 % 11) - 5, 3);
      u[i].canonicalize();
    }
    std::vector<mpq_class> lhs = r.multiply(act_on_motion(g, 1, u));
    std::vector<mpq_class> rhs = act_on_rows(g, 1, r.multiply(u));
    CAPTURE(key);
    CHECK(lhs == rhs);
  }
}
