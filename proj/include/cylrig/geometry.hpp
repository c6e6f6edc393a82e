#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "cylrig/error.hpp"
#include "cylrig/graph.hpp"
#include "cylrig/linalg.hpp"

namespace cylrig {

struct CylPoint {
  mpq_class x, y, z;

  bool on_cylinder() const { return x * x + y * y == 1; }
  bool operator==(const CylPoint& o) const { return x == o.x && y == o.y && z == o.z; }
};

// A realization failed: coincident bar ends or an unplaceable fixed vertex.
class GeometryError : public InputError {
 public:
  using InputError::InputError;
};

struct Framework {
  SymmetricGraph graph;
  std::vector<CylPoint> points;
};

using MotionVector = std::vector<mpq_class>;  // 3 entries per vertex

CylPoint apply_isometry(const SymmetryOp& op, const CylPoint& p);

// (x, y) from the tangent half-angle parameter t.
CylPoint cylinder_point(const mpq_class& t, const mpq_class& z);

struct RealizationOptions {
  long coordinate_range = 10000;
  int redraws = 16;
};

Framework random_symmetric_realization(const SymmetricGraph& g, std::uint64_t seed,
                                       const RealizationOptions& opts = {});

// Throws GeometryError if the points break symmetry, leave the cylinder or
// put an edge on a single point.
void check_framework(const Framework& f);

RationalMatrix rigidity_matrix(const Framework& f);

struct TrivialMotions {
  MotionVector t;
  MotionVector r;
};

TrivialMotions trivial_motion_basis(const Framework& f);

// Rank of the rigidity matrix, using 3|V| - 2 as the known bound.
int rigidity_rank(const Framework& f);

bool is_infinitesimally_rigid(const Framework& f);
bool is_independent(const Framework& f);
bool is_isostatic(const Framework& f);

// (tau x P_V)(g) applied to a motion: block v moves to g.v, rotated by tau(g).
MotionVector act_on_motion(const SymmetricGraph& g, int element, const MotionVector& u);
// P_E + P_V: the entry of row r moves to row g.r.
std::vector<mpq_class> act_on_rows(const SymmetricGraph& g, int element,
                                   const std::vector<mpq_class>& z);

struct IsostaticVerdict {
  bool isostatic = false;
  bool rigid = false;
  bool independent = false;
  bool probabilistic = false;  // a negative verdict is one-sided evidence
  int max_rank = 0;
  int expected_rank = 0;  // 3|V| - 2
  int rows = 0;           // |E| + |V|
  int attempts = 0;
  std::uint64_t seed = 0;
  std::uint64_t winning_seed = 0;
  bool small_input = false;  // |V| <= 2
};

std::uint64_t attempt_seed(std::uint64_t seed, int attempt);

IsostaticVerdict graph_is_gamma_isostatic(const SymmetricGraph& g, std::uint64_t seed,
                                          int retries = 3);

std::string to_string(const mpq_class& q);

}  // namespace cylrig
