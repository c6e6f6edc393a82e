#include "cylrig/geometry.hpp"

#include <random>

namespace cylrig {

CylPoint apply_isometry(const SymmetryOp& op, const CylPoint& p) {
  if (!op.exact) throw InputError("apply_isometry: " + op.describe() + " is not exact");
  return {op.diag[0] * p.x, op.diag[1] * p.y, op.diag[2] * p.z};
}

CylPoint cylinder_point(const mpq_class& t, const mpq_class& z) {
  mpq_class d = 1 + t * t;
  return {(1 - t * t) / d, 2 * t / d, z};
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

namespace {

struct Placement {
  bool x_zero = false;
  bool y_zero = false;
  bool z_zero = false;
};

Placement stabilizer_constraints(const SymmetricGraph& g, int v) {
  Placement pl;
  const GroupSpec& grp = g.group();
  for (int k = 1; k < grp.order(); ++k) {
    if (g.image(k, v) != v) continue;
    const SymmetryOp& op = grp.elements[k];
    if (!op.exact) throw GeometryError("vertex " + g.id(v) + " fixed by non-exact op");
    if (op.diag[0] < 0) pl.x_zero = true;
    if (op.diag[1] < 0) pl.y_zero = true;
    if (op.diag[2] < 0) pl.z_zero = true;
  }
  return pl;
}

std::vector<CylPoint> draw(const SymmetricGraph& g, std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> tdist(-range, range);
  std::uniform_int_distribution<long> zdist(1, range);
  std::uniform_int_distribution<int> coin(0, 1);
  const GroupSpec& grp = g.group();
  std::vector<CylPoint> pts(g.n());
  std::vector<char> placed(g.n(), 0);
  int pinned = 0;  // vertices whose point is fixed up to sign
  for (int v = 0; v < g.n(); ++v) {
    if (placed[v]) continue;
    Placement pl = stabilizer_constraints(g, v);
    CylPoint p;
    if (pl.x_zero && pl.y_zero) {
      throw GeometryError("vertex " + g.id(v) + " has no admissible point on the cylinder");
    }
    mpq_class z = 0;
    if (!pl.z_zero) {
      long num = zdist(rng);
      long den = zdist(rng);
      z = mpq_class(num, den);
      z.canonicalize();
    }
    if (pl.x_zero || pl.y_zero) {
      int sign;
      if (pl.z_zero) {
        // whole point is determined; alternate the two choices
        sign = pinned++ % 2 == 0 ? 1 : -1;
      } else {
        sign = coin(rng) ? 1 : -1;
      }
      if (pl.x_zero) {
        p = {0, sign, z};
      } else {
        p = {sign, 0, z};
      }
    } else {
      p = cylinder_point(mpq_class(tdist(rng)), z);
    }
    for (int k = 0; k < grp.order(); ++k) {
      int w = g.image(k, v);
      if (placed[w]) continue;
      pts[w] = apply_isometry(grp.elements[k], p);
      placed[w] = 1;
    }
  }
  return pts;
}

}  // namespace

void check_framework(const Framework& f) {
  const SymmetricGraph& g = f.graph;
  if (static_cast<int>(f.points.size()) != g.n()) throw GeometryError("point count mismatch");
  for (int v = 0; v < g.n(); ++v) {
    if (!f.points[v].on_cylinder()) throw GeometryError("point of " + g.id(v) + " off the cylinder");
    for (int k = 1; k < g.group().order(); ++k) {
      if (!(apply_isometry(g.group().elements[k], f.points[v]) == f.points[g.image(k, v)])) {
        throw GeometryError("placement not symmetric at vertex " + g.id(v));
      }
    }
  }
  for (const Edge& e : g.edges()) {
    if (f.points[e.u] == f.points[e.v]) {
      throw GeometryError("edge " + g.id(e.u) + "-" + g.id(e.v) + " has coincident ends");
    }
  }
}

Framework random_symmetric_realization(const SymmetricGraph& g, std::uint64_t seed,
                                       const RealizationOptions& opts) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < opts.redraws; ++attempt) {
    std::vector<CylPoint> pts = draw(g, rng, opts.coordinate_range);
    bool clash = false;
    for (const Edge& e : g.edges()) {
      if (pts[e.u] == pts[e.v]) {
        clash = true;
        break;
      }
    }
    if (!clash) return {g, std::move(pts)};
  }
  throw GeometryError("geometric degeneracy: adjacent vertices coincide after " +
                      std::to_string(opts.redraws) + " draws");
}

RationalMatrix rigidity_matrix(const Framework& f) {
  const SymmetricGraph& g = f.graph;
  RationalMatrix m(g.m() + g.n(), 3 * g.n());
  for (int e = 0; e < g.m(); ++e) {
    const Edge& ed = g.edges()[e];
    const CylPoint& a = f.points[ed.u];
    const CylPoint& b = f.points[ed.v];
    mpq_class d[3] = {a.x - b.x, a.y - b.y, a.z - b.z};
    for (int c = 0; c < 3; ++c) {
      m.at(e, 3 * ed.u + c) = d[c];
      m.at(e, 3 * ed.v + c) = -d[c];
    }
  }
  for (int v = 0; v < g.n(); ++v) {
    m.at(g.m() + v, 3 * v) = f.points[v].x;
    m.at(g.m() + v, 3 * v + 1) = f.points[v].y;
  }
  return m;
}

TrivialMotions trivial_motion_basis(const Framework& f) {
  const int n = f.graph.n();
  TrivialMotions tm{MotionVector(3 * n), MotionVector(3 * n)};
  for (int v = 0; v < n; ++v) {
    tm.t[3 * v + 2] = 1;
    tm.r[3 * v] = -f.points[v].y;
    tm.r[3 * v + 1] = f.points[v].x;
  }
  return tm;
}

int rigidity_rank(const Framework& f) {
  return exact_rank(rigidity_matrix(f), 3 * f.graph.n() - 2);
}

bool is_infinitesimally_rigid(const Framework& f) {
  return rigidity_rank(f) == 3 * f.graph.n() - 2;
}

bool is_independent(const Framework& f) {
  return rigidity_rank(f) == f.graph.m() + f.graph.n();
}

bool is_isostatic(const Framework& f) {
  int r = rigidity_rank(f);
  return r == 3 * f.graph.n() - 2 && r == f.graph.m() + f.graph.n();
}

MotionVector act_on_motion(const SymmetricGraph& g, int element, const MotionVector& u) {
  const SymmetryOp& op = g.group().elements.at(element);
  if (!op.exact) throw InputError("act_on_motion: non-exact op");
  MotionVector out(u.size());
  for (int v = 0; v < g.n(); ++v) {
    int w = g.image(element, v);
    for (int c = 0; c < 3; ++c) out[3 * w + c] = op.diag[c] * u[3 * v + c];
  }
  return out;
}

std::vector<mpq_class> act_on_rows(const SymmetricGraph& g, int element,
                                   const std::vector<mpq_class>& z) {
  std::vector<mpq_class> out(z.size());
  for (int e = 0; e < g.m(); ++e) {
    int f = g.edge_image(element, e);
    if (f < 0) throw InputError("act_on_rows: action is not an automorphism");
    out[f] = z[e];
  }
  for (int v = 0; v < g.n(); ++v) out[g.m() + g.image(element, v)] = z[g.m() + v];
  return out;
}

std::uint64_t attempt_seed(std::uint64_t seed, int attempt) {
  return seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(attempt);
}

IsostaticVerdict graph_is_gamma_isostatic(const SymmetricGraph& g, std::uint64_t seed,
                                          int retries) {
  IsostaticVerdict v;
  v.seed = seed;
  v.expected_rank = 3 * g.n() - 2;
  v.rows = g.m() + g.n();
  v.small_input = g.n() <= 2;
  // Without the right row count no realization can be isostatic, so one
  // draw is enough to report the rank.
  bool counts_match = v.rows == v.expected_rank;
  int tries = counts_match ? std::max(retries, 1) : 1;
  for (int a = 0; a < tries; ++a) {
    std::uint64_t s = attempt_seed(seed, a);
    Framework f = random_symmetric_realization(g, s);
    int r = rigidity_rank(f);
    ++v.attempts;
    if (r > v.max_rank || v.attempts == 1) {
      v.max_rank = r;
      v.winning_seed = s;
    }
    if (r == v.expected_rank && r == v.rows) break;
  }
  v.rigid = v.max_rank == v.expected_rank;
  v.independent = v.max_rank == v.rows;
  v.isostatic = v.rigid && v.independent;
  v.probabilistic = !v.isostatic && counts_match;
  return v;
}

}  // namespace cylrig
