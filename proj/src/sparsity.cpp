#include "cylrig/sparsity.hpp"

#include <algorithm>
#include <numeric>

#include "cylrig/error.hpp"

namespace cylrig {

PebbleGame::PebbleGame(int n) : pebbles_(n, 2), out_(n) {}

void PebbleGame::reverse_edge(int from, int to) {
  auto& o = out_[from];
  auto it = std::find(o.begin(), o.end(), to);
  if (it == o.end()) throw InternalError("pebble game lost an edge");
  o.erase(it);
  out_[to].push_back(from);
}

// Moves one free pebble from somewhere reachable to `to`, reversing the path.
bool PebbleGame::pull_pebble(int to, int protect) {
  const int nv = n();
  std::vector<int> parent(nv, -2);
  std::vector<int> stack{to};
  parent[to] = -1;
  int found = -1;
  while (!stack.empty() && found < 0) {
    int x = stack.back();
    stack.pop_back();
    for (int y : out_[x]) {
      if (parent[y] != -2) continue;
      parent[y] = x;
      if (y != protect && pebbles_[y] > 0) {
        found = y;
        break;
      }
      stack.push_back(y);
    }
  }
  if (found < 0) return false;
  for (int y = found; parent[y] >= 0; y = parent[y]) reverse_edge(parent[y], y);
  --pebbles_[found];
  ++pebbles_[to];
  return true;
}

int PebbleGame::gather(int u, int v) {
  bool progress = true;
  while (progress && pebbles_[u] + pebbles_[v] < 4) {
    progress = false;
    if (pebbles_[u] < 2 && pull_pebble(u, v)) progress = true;
    if (pebbles_[v] < 2 && pull_pebble(v, u)) progress = true;
  }
  return pebbles_[u] + pebbles_[v];
}

bool PebbleGame::insert(int u, int v) {
  if (u == v) return false;
  while (pebbles_[u] + pebbles_[v] < 3) {
    bool got = false;
    if (pebbles_[u] < 2) got = pull_pebble(u, v);
    if (!got && pebbles_[v] < 2) got = pull_pebble(v, u);
    if (!got) return false;
  }
  int tail = pebbles_[u] > 0 ? u : v;
  int head = tail == u ? v : u;
  --pebbles_[tail];
  out_[tail].push_back(head);
  ++accepted_;
  return true;
}

std::vector<int> PebbleGame::reach(const std::vector<int>& from) const {
  std::vector<char> seen(n(), 0);
  std::vector<int> stack, out;
  for (int s : from) {
    if (!seen[s]) {
      seen[s] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (int y : out_[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<int>> PebbleGame::min_tight_set(int u, int v) {
  if (u == v) return std::vector<int>{u};
  if (gather(u, v) > 2) return std::nullopt;
  auto r = reach({u, v});
  int free = 0;
  for (int x : r) free += pebbles_[x];
  if (free != 2) return std::nullopt;
  return r;
}

PebbleGame run_pebble_game(const SymmetricGraph& g) {
  PebbleGame game(g.n());
  for (const Edge& e : g.edges()) game.insert(e.u, e.v);
  return game;
}

SparsityReport check_22(const SymmetricGraph& g) {
  SparsityReport r;
  PebbleGame game(g.n());
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) {
      r.sparse = false;
      r.witness = std::vector<int>{e.u};
      return r;
    }
    if (!game.insert(e.u, e.v)) {
      r.sparse = false;
      game.gather(e.u, e.v);
      r.witness = game.reach({e.u, e.v});
      return r;
    }
  }
  r.tight = g.m() == 2 * g.n() - 2;
  return r;
}

int induced_edges(const SymmetricGraph& g, const std::vector<int>& vertices) {
  std::vector<char> in(g.n(), 0);
  for (int v : vertices) in[v] = 1;
  int count = 0;
  for (const Edge& e : g.edges()) count += (in[e.u] && in[e.v]);
  return count;
}

SparsityReport brute_force_sparse(const SymmetricGraph& g) {
  if (g.n() > 16) throw InputError("brute_force_sparse needs |V| <= 16");
  SparsityReport r;
  const int nv = g.n();
  std::vector<unsigned> emask;
  for (const Edge& e : g.edges()) emask.push_back((1u << e.u) | (1u << e.v));
  for (unsigned s = 1; s < (1u << nv); ++s) {
    int size = __builtin_popcount(s);
    int inside = 0;
    for (unsigned m : emask) inside += ((m & s) == m);
    if (inside > 2 * size - 2) {
      r.sparse = false;
      std::vector<int> w;
      for (int v = 0; v < nv; ++v) {
        if (s & (1u << v)) w.push_back(v);
      }
      r.witness = std::move(w);
      return r;
    }
  }
  r.tight = g.m() == 2 * nv - 2;
  return r;
}

bool addable(const SymmetricGraph& g, int u, int v) {
  if (u == v || g.has_edge(u, v)) throw InputError("addable: pair is an edge");
  PebbleGame game(g.n());
  for (const Edge& e : g.edges()) {
    if (!game.insert(e.u, e.v)) return false;
  }
  return game.insert(u, v);
}

bool addable_pair(const SymmetricGraph& g, Edge e1, Edge e2) {
  if (e1.u == e1.v || e2.u == e2.v || g.has_edge(e1.u, e1.v) ||
      g.has_edge(e2.u, e2.v)) {
    throw InputError("addable_pair: pairs must be non-edges");
  }
  if (std::minmax(e1.u, e1.v) == std::minmax(e2.u, e2.v)) return false;
  PebbleGame game(g.n());
  for (const Edge& e : g.edges()) {
    if (!game.insert(e.u, e.v)) return false;
  }
  return game.insert(e1.u, e1.v) && game.insert(e2.u, e2.v);
}

namespace {

bool c2_condition(const FixedCounts& c) {
  return (c.fixed_edges == 2 && c.fixed_vertices == 0) ||
         (c.fixed_edges == 0 && c.fixed_vertices == 1);
}

}  // namespace

bool fixed_count_conditions(const SymmetricGraph& g, std::vector<std::string>* reasons) {
  const GroupSpec& grp = g.group();
  bool ok = true;
  auto note = [&](const std::string& why) {
    ok = false;
    if (reasons) reasons->push_back(why);
  };
  for (int k = 1; k < grp.order(); ++k) {
    FixedElements f = fixed_elements(g, k);
    FixedCounts c{static_cast<int>(f.vertices.size()), static_cast<int>(f.edges.size())};
    const std::string& lab = grp.labels[k];
    switch (grp.elements[k].kind) {
      case OpKind::inversion:
      case OpKind::sigma_axial:
      case OpKind::sigma_horizontal:
        if (c.fixed_edges != 0) {
          note(std::to_string(c.fixed_edges) + " edge(s) fixed by " + lab +
               ", expected 0");
        }
        break;
      case OpKind::halfturn_perp:
        if (grp.name == GroupName::C2h) {
          if (c.fixed_edges != 2 || c.fixed_vertices != 0) {
            note(lab + " fixes " + std::to_string(c.fixed_edges) + " edge(s) and " +
                 std::to_string(c.fixed_vertices) +
                 " vertex(es), expected 2 edges and 0 vertices");
          }
        } else if (!c2_condition(c)) {
          note(lab + " fixes " + std::to_string(c.fixed_edges) + " edge(s) and " +
               std::to_string(c.fixed_vertices) +
               " vertex(es), expected (2,0) or (0,1)");
        }
        break;
      default:
        break;
    }
  }
  return ok;
}

std::optional<std::vector<int>> unbalanced_invariant_tight_set(const SymmetricGraph& g,
                                                              int element) {
  FixedElements f = fixed_elements(g, element);
  // An invariant tight set missing the fixed vertex, or at least one of the
  // two fixed edges, lives in the graph with those vertices removed.
  std::vector<std::vector<int>> removals;
  if (f.vertices.size() == 1 && f.edges.empty()) removals.push_back(f.vertices);
  if (f.vertices.empty() && f.edges.size() == 2) {
    for (int e : f.edges) removals.push_back({g.edges()[e].u, g.edges()[e].v});
  }
  for (const auto& drop : removals) {
    std::vector<int> local(g.n(), -1), global;
    for (int v = 0; v < g.n(); ++v) {
      if (std::find(drop.begin(), drop.end(), v) != drop.end()) continue;
      local[v] = static_cast<int>(global.size());
      global.push_back(v);
    }
    const int n = static_cast<int>(global.size());
    PebbleGame game(n);
    std::vector<Edge> inside;
    for (const Edge& e : g.edges()) {
      if (local[e.u] < 0 || local[e.v] < 0) continue;
      inside.push_back({local[e.u], local[e.v]});
      game.insert(local[e.u], local[e.v]);
    }
    // Maximal tight sets with an edge are vertex-disjoint; an invariant
    // tight set exists iff one of them is invariant.
    std::vector<int> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int x) {
      while (comp[x] != x) x = comp[x] = comp[comp[x]];
      return x;
    };
    std::vector<char> covered(n, 0);
    for (const Edge& e : inside) {
      if (find(e.u) == find(e.v) && covered[e.u] && covered[e.v]) continue;
      auto t = game.min_tight_set(e.u, e.v);
      if (!t) continue;
      for (int x : *t) {
        covered[x] = 1;
        comp[find(x)] = find(t->front());
      }
    }
    for (int x = 0; x < n; ++x) {
      if (!covered[x]) continue;
      int y = local[g.image(element, global[x])];
      if (y < 0 || !covered[y] || find(y) != find(x)) continue;
      std::vector<int> out;
      for (int z = 0; z < n; ++z) {
        if (covered[z] && find(z) == find(x)) out.push_back(global[z]);
      }
      return out;
    }
  }
  return std::nullopt;
}

GammaTightReport gamma_tight(const SymmetricGraph& g) {
  const GroupSpec& grp = g.group();
  if (grp.name == GroupName::C2z) {
    throw InputError("gamma_tight: group C2z has no tightness characterization");
  }
  GammaTightReport r;
  r.necessary_only = grp.name == GroupName::C2v || grp.name == GroupName::C2h;
  r.sparsity = check_22(g);
  for (int k = 1; k < grp.order(); ++k) {
    FixedElements f = fixed_elements(g, k);
    r.counts.push_back({static_cast<int>(f.vertices.size()),
                        static_cast<int>(f.edges.size())});
  }
  if (!r.sparsity.sparse) {
    r.reasons.push_back("not (2,2)-sparse");
  } else if (!r.sparsity.tight) {
    r.reasons.push_back("|E| = " + std::to_string(g.m()) + " but 2|V|-2 = " +
                        std::to_string(2 * g.n() - 2));
  }
  bool counts_ok = fixed_count_conditions(g, &r.reasons);
  if (r.sparsity.tight && counts_ok) {
    for (int k = 1; k < grp.order(); ++k) {
      if (grp.elements[k].kind != OpKind::halfturn_perp) continue;
      auto bad = unbalanced_invariant_tight_set(g, k);
      if (!bad) continue;
      counts_ok = false;
      std::string ids;
      for (int v : *bad) ids += (ids.empty() ? "" : ",") + g.id(v);
      r.reasons.push_back("tight subgraph on {" + ids + "} is invariant under " +
                          grp.labels[k] + " but lacks the fixed vertex or a fixed edge");
      r.sparsity.witness = *bad;
    }
  }
  r.gamma_tight = r.sparsity.tight && counts_ok;
  return r;
}

std::vector<int> min_tight_superset(const SymmetricGraph& g,
                                    const std::vector<int>& vertices) {
  if (vertices.empty()) return {};
  PebbleGame game = run_pebble_game(g);
  std::vector<char> in(g.n(), 0);
  int anchor = vertices.front();
  in[anchor] = 1;
  for (int s : vertices) {
    if (in[s]) continue;
    auto t = game.min_tight_set(anchor, s);
    if (!t) throw InternalError("min_tight_superset on a graph that is not tight");
    for (int x : *t) in[x] = 1;
  }
  std::vector<int> out;
  for (int v = 0; v < g.n(); ++v) {
    if (in[v]) out.push_back(v);
  }
  return out;
}

}  // namespace cylrig
