#include "cylrig/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cylrig/error.hpp"

namespace cylrig {

SymmetricGraph::SymmetricGraph() : group_(GroupSpec::make(GroupName::trivial)) {
  perms_.emplace_back();
}

SymmetricGraph::SymmetricGraph(GroupSpec group, std::vector<std::string> ids,
                               std::vector<Edge> edges,
                               std::vector<std::vector<int>> perms)
    : group_(std::move(group)), ids_(std::move(ids)) {
  const int nv = n();
  for (int i = 0; i < nv; ++i) {
    if (!index_.emplace(ids_[i], i).second) {
      throw InputError("duplicate vertex id '" + ids_[i] + "'");
    }
  }
  if (static_cast<int>(perms.size()) != group_.order() - 1) {
    throw InputError("expected " + std::to_string(group_.order() - 1) +
                     " action permutations, got " + std::to_string(perms.size()));
  }
  std::vector<int> identity(nv);
  std::iota(identity.begin(), identity.end(), 0);
  perms_.push_back(identity);
  for (auto& p : perms) {
    if (static_cast<int>(p.size()) != nv) {
      throw InputError("action permutation has wrong length");
    }
    std::vector<char> seen(nv, 0);
    for (int x : p) {
      if (x < 0 || x >= nv || seen[x]) {
        throw InputError("action is not a permutation of the vertices");
      }
      seen[x] = 1;
    }
    perms_.push_back(std::move(p));
  }
  adj_.assign(nv, {});
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u < 0 || e.u >= nv || e.v < 0 || e.v >= nv) {
      throw InputError("edge endpoint out of range");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    int idx = static_cast<int>(edges_.size());
    edges_.push_back(e);
    if (edge_lookup_.emplace(key(e.u, e.v), idx).second && e.u != e.v) {
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

SymmetricGraph SymmetricGraph::from_ids(
    GroupSpec group, std::vector<std::string> ids,
    const std::vector<IdPair>& edges,
    const std::vector<std::map<std::string, std::string>>& action) {
  std::unordered_map<std::string, int> idx;
  for (size_t i = 0; i < ids.size(); ++i) idx.emplace(ids[i], static_cast<int>(i));
  auto lookup = [&](const std::string& s) {
    auto it = idx.find(s);
    if (it == idx.end()) throw InputError("unknown vertex id '" + s + "'");
    return it->second;
  };
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& [a, b] : edges) es.push_back({lookup(a), lookup(b)});
  std::vector<std::vector<int>> perms;
  for (const auto& m : action) {
    std::vector<int> p(ids.size(), -1);
    for (const auto& [from, to] : m) p[lookup(from)] = lookup(to);
    for (size_t i = 0; i < p.size(); ++i) {
      if (p[i] < 0) throw InputError("action does not map vertex '" + ids[i] + "'");
    }
    perms.push_back(std::move(p));
  }
  return SymmetricGraph(std::move(group), std::move(ids), std::move(es),
                        std::move(perms));
}

std::optional<int> SymmetricGraph::index(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int SymmetricGraph::index_or_throw(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw InputError("unknown vertex id '" + id + "'");
  return it->second;
}

std::uint64_t SymmetricGraph::key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

int SymmetricGraph::edge_index(int u, int v) const {
  auto it = edge_lookup_.find(key(u, v));
  return it == edge_lookup_.end() ? -1 : it->second;
}

int SymmetricGraph::edge_image(int element, int e) const {
  return edge_index(perms_[element][edges_[e].u], perms_[element][edges_[e].v]);
}

ValidationReport validate(const SymmetricGraph& g) {
  ValidationReport r;
  auto fail = [&](std::string msg) {
    r.ok = false;
    r.violations.push_back(std::move(msg));
  };
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) {
      fail("loop at vertex " + g.id(e.u));
    } else if (!seen.insert({e.u, e.v}).second) {
      fail("parallel edge " + g.id(e.u) + "-" + g.id(e.v));
    }
  }
  const GroupSpec& grp = g.group();
  for (int k = 1; k < grp.order(); ++k) {
    for (const Edge& e : g.edges()) {
      if (e.u == e.v) continue;
      int a = g.image(k, e.u), b = g.image(k, e.v);
      if (!g.has_edge(a, b)) {
        fail("not an automorphism: " + grp.labels[k] + " maps edge " + g.id(e.u) +
             "-" + g.id(e.v) + " to non-edge " + g.id(a) + "-" + g.id(b));
      }
    }
    if (!grp.elements[k].has_cylinder_fixed_points()) {
      for (int v = 0; v < g.n(); ++v) {
        if (g.image(k, v) == v) {
          fail("vertex " + g.id(v) + " is fixed by " + grp.elements[k].describe() +
               ", which fixes no point of the cylinder");
        }
      }
    }
  }
  bool exact = std::all_of(grp.elements.begin(), grp.elements.end(),
                           [](const SymmetryOp& op) { return op.exact; });
  if (exact) {
    for (int a = 1; a < grp.order(); ++a) {
      for (int b = 1; b < grp.order(); ++b) {
        int c = grp.compose(a, b);
        for (int v = 0; v < g.n(); ++v) {
          if (g.image(a, g.image(b, v)) != g.image(c, v)) {
            fail("not a homomorphism: " + grp.labels[a] + " after " +
                 grp.labels[b] + " differs from " + grp.labels[c] + " at vertex " +
                 g.id(v));
            break;
          }
        }
      }
    }
  }
  return r;
}

FixedElements fixed_elements(const SymmetricGraph& g, int element) {
  if (element < 0 || element >= g.group().order()) {
    throw InputError("element not in group");
  }
  FixedElements f;
  for (int v = 0; v < g.n(); ++v) {
    if (g.image(element, v) == v) f.vertices.push_back(v);
  }
  for (int e = 0; e < g.m(); ++e) {
    const Edge& ed = g.edges()[e];
    int a = g.image(element, ed.u), b = g.image(element, ed.v);
    if ((a == ed.u && b == ed.v) || (a == ed.v && b == ed.u)) f.edges.push_back(e);
  }
  return f;
}

FixedElements fixed_elements(const SymmetricGraph& g, const SymmetryOp& op) {
  const auto& els = g.group().elements;
  auto it = std::find(els.begin(), els.end(), op);
  if (it == els.end()) {
    throw InputError(op.describe() + " is not in group " +
                     group_name_str(g.group().name));
  }
  return fixed_elements(g, static_cast<int>(it - els.begin()));
}

Orbits orbits(const SymmetricGraph& g) {
  Orbits o;
  const int k = g.group().order();
  std::vector<char> vdone(g.n(), 0);
  for (int v = 0; v < g.n(); ++v) {
    if (vdone[v]) continue;
    std::vector<int> orb;
    for (int el = 0; el < k; ++el) {
      int w = g.image(el, v);
      if (!vdone[w]) {
        vdone[w] = 1;
        orb.push_back(w);
      }
    }
    o.vertex_orbits.push_back(std::move(orb));
  }
  std::vector<char> edone(g.m(), 0);
  for (int e = 0; e < g.m(); ++e) {
    if (edone[e]) continue;
    std::vector<int> orb;
    for (int el = 0; el < k; ++el) {
      int f = g.edge_image(el, e);
      if (f >= 0 && !edone[f]) {
        edone[f] = 1;
        orb.push_back(f);
      }
    }
    o.edge_orbits.push_back(std::move(orb));
  }
  return o;
}

bool same_labeled(const SymmetricGraph& a, const SymmetricGraph& b) {
  if (a.group().name != b.group().name || a.n() != b.n() || a.m() != b.m()) {
    return false;
  }
  std::vector<int> to_b(a.n());
  for (int v = 0; v < a.n(); ++v) {
    auto w = b.index(a.id(v));
    if (!w) return false;
    to_b[v] = *w;
  }
  for (const Edge& e : a.edges()) {
    if (!b.has_edge(to_b[e.u], to_b[e.v])) return false;
  }
  for (int k = 1; k < a.group().order(); ++k) {
    for (int v = 0; v < a.n(); ++v) {
      if (to_b[a.image(k, v)] != b.image(k, to_b[v])) return false;
    }
  }
  return true;
}

SymmetricGraph induced_subgraph(const SymmetricGraph& g,
                                const std::vector<int>& vertices) {
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> pos(g.n(), -1);
  std::vector<std::string> ids;
  for (size_t i = 0; i < sorted.size(); ++i) {
    pos[sorted[i]] = static_cast<int>(i);
    ids.push_back(g.id(sorted[i]));
  }
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    if (pos[e.u] >= 0 && pos[e.v] >= 0) es.push_back({pos[e.u], pos[e.v]});
  }
  std::vector<std::vector<int>> perms;
  for (int k = 1; k < g.group().order(); ++k) {
    std::vector<int> p(sorted.size());
    for (size_t i = 0; i < sorted.size(); ++i) {
      int w = pos[g.image(k, sorted[i])];
      if (w < 0) throw InputError("induced vertex set is not invariant");
      p[i] = w;
    }
    perms.push_back(std::move(p));
  }
  return SymmetricGraph(g.group(), std::move(ids), std::move(es), std::move(perms));
}

SymmetricGraph with_group(const SymmetricGraph& g, GroupName name) {
  GroupSpec spec = GroupSpec::make(name);
  if (spec.order() != g.group().order()) {
    throw InputError("group order mismatch");
  }
  std::vector<std::vector<int>> perms;
  for (int k = 1; k < spec.order(); ++k) perms.push_back(g.perm(k));
  return SymmetricGraph(std::move(spec), g.ids(), g.edges(), std::move(perms));
}

bool id_less(const std::string& a, const std::string& b) {
  auto numeric = [](const std::string& s) {
    return !s.empty() && s.size() < 19 &&
           std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  bool na = numeric(a), nb = numeric(b);
  if (na && nb) {
    long long x = std::stoll(a), y = std::stoll(b);
    if (x != y) return x < y;
    return a < b;
  }
  if (na != nb) return na;
  return a < b;
}

}  // namespace cylrig
