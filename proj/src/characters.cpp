#include "cylrig/characters.hpp"

#include "cylrig/error.hpp"
#include "cylrig/sparsity.hpp"

namespace cylrig {

int trivial_character(const SymmetryOp& op) {
  switch (op.kind) {
    case OpKind::identity:
    case OpKind::rotation_z:
      return 2;
    case OpKind::halfturn_perp:
      return -2;
    default:
      return 0;
  }
}

namespace {

// Closed forms of the character table in terms of fixed counts.
void table_values(const SymmetryOp& op, int nv, int ne, int v, int e, int* edge,
                  int* external) {
  switch (op.kind) {
    case OpKind::identity:
      *edge = ne + nv;
      *external = 3 * nv;
      return;
    case OpKind::halfturn_perp:
      *edge = e + v;
      *external = -v;
      return;
    case OpKind::sigma_axial:
    case OpKind::sigma_horizontal:
      *edge = e + v;
      *external = v;
      return;
    case OpKind::inversion:
    case OpKind::rotation_z:
    case OpKind::improper_z:
      // these fix no point of the cylinder, so no vertex either
      *edge = e;
      *external = 0;
      return;
  }
}

}  // namespace

CharacterRows character_rows(const SymmetricGraph& g) {
  const GroupSpec& grp = g.group();
  CharacterRows rows;
  rows.labels = grp.labels;
  for (int k = 0; k < grp.order(); ++k) {
    const SymmetryOp& op = grp.elements[k];
    int fixed_v = 0, ext = 0;
    for (int v = 0; v < g.n(); ++v) {
      if (g.image(k, v) != v) continue;
      ++fixed_v;
      auto tr = op.trace();
      if (!tr) throw InputError("no integer trace for " + op.describe());
      ext += *tr;
    }
    int fixed_e = 0;
    for (int e = 0; e < g.m(); ++e) fixed_e += g.edge_image(k, e) == e;
    int edge = fixed_e + fixed_v;

    FixedElements f = fixed_elements(g, k);
    int t_edge = 0, t_ext = 0;
    table_values(op, g.n(), g.m(), static_cast<int>(f.vertices.size()),
                 static_cast<int>(f.edges.size()), &t_edge, &t_ext);
    if (t_edge != edge || t_ext != ext) {
      throw InternalError("character mismatch at " + grp.labels[k] + ": computed (" +
                          std::to_string(edge) + ", " + std::to_string(ext) +
                          "), table (" + std::to_string(t_edge) + ", " +
                          std::to_string(t_ext) + ")");
    }
    rows.edge.push_back(edge);
    rows.external.push_back(ext);
    rows.trivial.push_back(trivial_character(op));
  }
  return rows;
}

NecessaryVerdict necessary_conditions(const SymmetricGraph& g) {
  NecessaryVerdict v;
  const GroupSpec& grp = g.group();
  v.necessary_only = grp.name == GroupName::C2v || grp.name == GroupName::C2h;
  CharacterRows rows = character_rows(g);
  bool chars_ok = true;
  for (int k = 0; k < grp.order(); ++k) {
    int res = rows.external[k] - rows.trivial[k] - rows.edge[k];
    v.residuals.push_back(res);
    if (res != 0) {
      chars_ok = false;
      v.failures.push_back("character equation fails at " + grp.labels[k] + ": " +
                           std::to_string(rows.edge[k]) + " != " +
                           std::to_string(rows.external[k]) + " - " +
                           std::to_string(rows.trivial[k]));
    }
  }
  v.count_ok = g.m() == 2 * g.n() - 2;
  if (!v.count_ok) {
    v.failures.push_back("|E| = " + std::to_string(g.m()) + ", 2|V|-2 = " +
                         std::to_string(2 * g.n() - 2));
  }
  v.fixed_counts_ok = fixed_count_conditions(g, &v.failures);
  v.pass = chars_ok && v.count_ok && v.fixed_counts_ok;
  return v;
}

}  // namespace cylrig
