#include "cylrig/trees.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "cylrig/catalog.hpp"
#include "cylrig/construction.hpp"

namespace cylrig {

namespace {

struct UnionFind {
  std::vector<int> parent, rank_;
  std::vector<std::pair<int, int>> trail;  // (child root, old rank of parent root) or (-1, -1)

  explicit UnionFind(int n) : parent(n), rank_(n, 0) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    trail.push_back({b, rank_[a]});
    parent[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }
  void undo() {
    auto [b, r] = trail.back();
    trail.pop_back();
    int a = parent[b];
    parent[b] = b;
    rank_[a] = r;
  }
};

bool is_forest_tree(const SymmetricGraph& g, const std::vector<char>& red, char cls) {
  UnionFind uf(g.n());
  int count = 0;
  for (int e = 0; e < g.m(); ++e) {
    if (red[e] != cls) continue;
    ++count;
    if (!uf.unite(g.edges()[e].u, g.edges()[e].v)) return false;
  }
  return count == g.n() - 1;
}

using Key = std::pair<std::string, std::string>;

Key key(const std::string& a, const std::string& b) { return a < b ? Key{a, b} : Key{b, a}; }

// Coloring keyed by vertex ids, so it survives rebuilding the graph.
class IdColoring {
 public:
  IdColoring() = default;
  IdColoring(const SymmetricGraph& g, const TwoTreeColoring& c) {
    for (int e = 0; e < g.m(); ++e) {
      auto [a, b] = g.edge_ids(e);
      color_[key(a, b)] = c.red[e];
    }
  }

  bool has(const std::string& a, const std::string& b) const { return color_.count(key(a, b)) > 0; }
  char at(const std::string& a, const std::string& b) const {
    auto it = color_.find(key(a, b));
    if (it == color_.end()) throw InternalError("no color for edge " + a + "-" + b);
    return it->second;
  }
  void set(const std::string& a, const std::string& b, char c) { color_[key(a, b)] = c; }

  // Colors e and its image: same color for C2, opposite for swap groups.
  void set_orbit(const SymmetricGraph& g, const std::string& a, const std::string& b, char c) {
    set(a, b, c);
    const std::string& ai = g.id(g.mate(g.index_or_throw(a)));
    const std::string& bi = g.id(g.mate(g.index_or_throw(b)));
    if (key(ai, bi) == key(a, b)) return;
    set(ai, bi, g.group().swaps_trees() ? !c : c);
  }

  void merge(const IdColoring& other) {
    for (const auto& [k, c] : other.color_) color_[k] = c;
  }

  // Keeps colors of edges of g that already have one; nullopt if some
  // edge is missing.
  std::optional<TwoTreeColoring> on(const SymmetricGraph& g) const {
    TwoTreeColoring out;
    out.red.resize(g.m());
    for (int e = 0; e < g.m(); ++e) {
      auto [a, b] = g.edge_ids(e);
      auto it = color_.find(key(a, b));
      if (it == color_.end()) return std::nullopt;
      out.red[e] = it->second;
    }
    return out;
  }

 private:
  std::map<Key, char> color_;
};

struct Propagate {
  const SymmetricGraph& before;
  const SymmetricGraph& after;
  const IdColoring& old;
  IdColoring next;
  const TwoTreeColoring* nested_coloring = nullptr;
  const SymmetricGraph* nested = nullptr;
  // Extra attempts tried when the first guess fails.
  std::vector<IdColoring> alternatives;

  std::string img(const std::string& v) const { return after.id(after.mate(after.index_or_throw(v))); }
  std::string old_img(const std::string& v) const {
    return before.id(before.mate(before.index_or_throw(v)));
  }

  void operator()(const Sym0Ext& s) {
    next.set_orbit(after, s.vertex, s.neighbors[0], 1);
    next.set_orbit(after, s.vertex, s.neighbors[1], 0);
  }

  void operator()(const FixedVertex0Ext& s) { next.set_orbit(after, s.vertex, s.neighbors[0], 1); }

  void operator()(const Sym1Ext& s) {
    char c = old.at(s.edge.first, s.edge.second);
    next.set_orbit(after, s.vertex, s.edge.first, c);
    next.set_orbit(after, s.vertex, s.edge.second, c);
    next.set_orbit(after, s.vertex, s.third, !c);
  }

  void operator()(const Double1Ext& s) {
    char c = old.at(s.edge.first, s.edge.second);
    next.set_orbit(after, s.vertex, s.edge.first, c);
    next.set_orbit(after, s.vertex, s.image, c);
    next.set_orbit(after, s.vertex, s.other, !c);
  }

  void operator()(const VertexToK4& s) {
    const std::string& w = s.split;
    const auto& [a, b, c] = s.added;
    if (s.images) {
      next.set_orbit(after, w, a, 1);
      next.set_orbit(after, a, b, 1);
      next.set_orbit(after, b, c, 1);
      next.set_orbit(after, w, b, 0);
      next.set_orbit(after, w, c, 0);
      next.set_orbit(after, a, c, 0);
      const std::string wi = old_img(w);
      for (const auto& [y, d] : s.attach) {
        if (y == wi) {
          next.set(d, img(d), old.at(w, wi));
        } else {
          next.set_orbit(after, d, y, old.at(w, y));
        }
      }
    } else {
      next.set(w, c, 1);
      next.set(a, b, 1);
      next.set(w, a, 1);
      next.set(w, b, 0);
      next.set(a, c, 0);
      next.set(b, c, 0);
      for (const auto& [y, d] : s.attach) next.set(d, y, old.at(w, y));
    }
  }

  void operator()(const VertexToC4& s) {
    const std::string& w = s.split;
    const std::string& u = s.added;
    const auto& [v1, v2] = s.doubled;
    std::string wi = old_img(w);
    for (const auto& m : s.moved) {
      if (s.image && m == wi) {
        next.set(u, *s.image, old.at(w, wi));
      } else {
        next.set_orbit(after, u, m, old.at(w, m));
      }
    }
    char c1 = old.at(w, v1), c2 = old.at(w, v2);
    if (c1 != c2) {
      next.set_orbit(after, u, v1, c1);
      next.set_orbit(after, u, v2, c2);
      return;
    }
    // Same color at both doubled edges: try every coloring of the four
    // edges around the new square.
    for (int mask = 0; mask < 16; ++mask) {
      IdColoring alt = next;
      alt.set_orbit(after, w, v1, mask & 1);
      alt.set_orbit(after, w, v2, (mask >> 1) & 1);
      alt.set_orbit(after, u, v1, (mask >> 2) & 1);
      alt.set_orbit(after, u, v2, (mask >> 3) & 1);
      alternatives.push_back(std::move(alt));
    }
  }

  void operator()(const JoinTwoEdges& s) {
    next.merge(IdColoring(*nested, *nested_coloring));
    next.set_orbit(after, s.edge.first, s.edge.second, 1);
  }

  void operator()(const VertexToTight& s) {
    next.merge(IdColoring(*nested, *nested_coloring));
    for (const auto& [y, h] : s.attach) next.set(y, h, old.at(s.split, y));
  }
};

}  // namespace

bool verify_decomposition(const SymmetricGraph& g, const TwoTreeColoring& c) {
  if (static_cast<int>(c.red.size()) != g.m()) return false;
  if (g.n() == 0) return false;
  if (!is_forest_tree(g, c.red, 1) || !is_forest_tree(g, c.red, 0)) return false;
  const GroupName name = g.group().name;
  if (name == GroupName::trivial) return true;
  if (!g.group().is_order_two()) return false;
  const bool swap = g.group().swaps_trees();
  if (!swap && name != GroupName::C2) return false;
  for (int e = 0; e < g.m(); ++e) {
    int f = g.edge_image(1, e);
    if (f < 0) return false;
    if (swap ? c.red[f] == c.red[e] : c.red[f] != c.red[e]) return false;
  }
  return true;
}

TwoTreeColoring decompose(const SymmetricGraph& g, const Certificate& cert, DecomposeLog* log) {
  const CatalogEntry& entry = catalog_entry(cert.base);
  SymmetricGraph cur = base_graph(cert);
  TwoTreeColoring col = entry.coloring;
  auto note = [&](const std::string& msg) {
    if (log) {
      ++log->fallbacks;
      log->messages.push_back(msg);
    }
  };
  if (!verify_decomposition(cur, col)) {
    auto found = search_decomposition(cur);
    if (!found) throw InternalError("base graph " + cert.base + " has no two-tree coloring");
    note("base " + cert.base + ": searched");
    col = *found;
  }
  for (size_t i = 0; i < cert.steps.size(); ++i) {
    const ConstructionStep& step = cert.steps[i];
    std::optional<SymmetricGraph> nested;
    std::optional<TwoTreeColoring> nested_col;
    std::shared_ptr<const Certificate> sub;
    if (auto* j = std::get_if<JoinTwoEdges>(&step)) sub = j->other;
    if (auto* t = std::get_if<VertexToTight>(&step)) sub = t->block;
    if (sub) {
      nested = replay(*sub);
      nested_col = decompose(*nested, *sub, log);
    }
    SymmetricGraph after = apply_step_with(cur, step, nested ? &*nested : nullptr, false);
    IdColoring old(cur, col);
    Propagate p{cur, after, old, old, nested_col ? &*nested_col : nullptr,
                nested ? &*nested : nullptr, {}};
    std::visit(p, step);
    std::optional<TwoTreeColoring> next;
    auto first = p.next.on(after);
    if (first && verify_decomposition(after, *first)) next = first;
    for (const auto& alt : p.alternatives) {
      if (next) break;
      auto c = alt.on(after);
      if (c && verify_decomposition(after, *c)) next = c;
    }
    if (!next) {
      next = search_decomposition(after);
      if (!next) {
        throw InternalError("no two-tree coloring after step " + std::to_string(i + 1) + " (" +
                            step_name(step) + ")");
      }
      note("step " + std::to_string(i + 1) + " (" + step_name(step) + "): searched");
    }
    col = std::move(*next);
    cur = std::move(after);
  }
  // The certificate may build g up to a relabeling.
  if (same_labeled(cur, g)) return IdColoring(cur, col).on(g).value();
  auto iso = equivariant_isomorphism(cur, g);
  if (!iso) throw InputError("certificate does not build the given graph");
  TwoTreeColoring out;
  out.red.resize(g.m());
  for (int e = 0; e < cur.m(); ++e) {
    const Edge& ed = cur.edges()[e];
    out.red[g.edge_index((*iso)[ed.u], (*iso)[ed.v])] = col.red[e];
  }
  return out;
}

namespace {

// Red tree with one edge per orbit; blue is its image.
std::optional<TwoTreeColoring> intersect(const SymmetricGraph& g) {
  const int n = g.n(), m = g.m();
  if (m != 2 * (n - 1)) return std::nullopt;
  std::vector<int> orbit_of(m, -1);
  int orbit_count = 0;
  for (int e = 0; e < m; ++e) {
    if (orbit_of[e] >= 0) continue;
    int f = g.edge_image(1, e);
    if (f < 0 || f == e) return std::nullopt;
    orbit_of[e] = orbit_of[f] = orbit_count++;
  }
  std::vector<char> in(m, 0);
  int size = 0;
  while (size < n - 1) {
    // forest adjacency of the current set
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    std::vector<int> taken(orbit_count, -1);
    for (int e = 0; e < m; ++e) {
      if (!in[e]) continue;
      adj[g.edges()[e].u].push_back({g.edges()[e].v, e});
      adj[g.edges()[e].v].push_back({g.edges()[e].u, e});
      taken[orbit_of[e]] = e;
    }
    // tree path between two vertices, as edge indices, or nullopt if disconnected
    auto path = [&](int s, int t) -> std::optional<std::vector<int>> {
      std::vector<int> via(n, -2), from(n, -1);
      via[s] = -1;
      std::deque<int> q{s};
      while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        if (x == t) break;
        for (auto [y, e] : adj[x]) {
          if (via[y] != -2) continue;
          via[y] = e;
          from[y] = x;
          q.push_back(y);
        }
      }
      if (via[t] == -2) return std::nullopt;
      std::vector<int> p;
      for (int x = t; x != s; x = from[x]) p.push_back(via[x]);
      return p;
    };
    std::vector<std::vector<int>> out(m);  // exchange graph
    std::vector<char> source(m, 0), sink(m, 0);
    for (int y = 0; y < m; ++y) {
      if (in[y]) continue;
      auto p = path(g.edges()[y].u, g.edges()[y].v);
      if (!p) {
        source[y] = 1;
      } else {
        for (int x : *p) out[x].push_back(y);
      }
      int t = taken[orbit_of[y]];
      if (t < 0) {
        sink[y] = 1;
      } else {
        out[y].push_back(t);
      }
    }
    std::vector<int> prev(m, -2);
    std::deque<int> q;
    for (int y = 0; y < m; ++y) {
      if (source[y]) {
        prev[y] = -1;
        q.push_back(y);
      }
    }
    int end = -1;
    while (!q.empty() && end < 0) {
      int x = q.front();
      q.pop_front();
      if (sink[x]) {
        end = x;
        break;
      }
      for (int y : out[x]) {
        if (prev[y] != -2) continue;
        prev[y] = x;
        q.push_back(y);
      }
    }
    if (end < 0) return std::nullopt;
    for (int x = end; x >= 0; x = prev[x]) in[x] = !in[x];
    ++size;
  }
  TwoTreeColoring c;
  c.red.assign(in.begin(), in.end());
  return c;
}

// Orbit-by-orbit search for groups whose trees are invariant.
std::optional<TwoTreeColoring> orbit_search(const SymmetricGraph& g, long node_limit) {
  const int n = g.n(), m = g.m();
  if (m != 2 * (n - 1)) return std::nullopt;
  std::vector<std::vector<int>> orbs;
  if (g.group().order() == 1) {
    for (int e = 0; e < m; ++e) orbs.push_back({e});
  } else {
    orbs = orbits(g).edge_orbits;
  }
  // Orbits in breadth-first order from vertex 0 so that trees grow connected.
  std::vector<int> order;
  {
    std::vector<char> seen_v(n, 0), seen_o(orbs.size(), 0);
    std::vector<int> orbit_of(m);
    for (size_t k = 0; k < orbs.size(); ++k) {
      for (int e : orbs[k]) orbit_of[e] = static_cast<int>(k);
    }
    std::deque<int> q{0};
    seen_v[0] = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int y : g.neighbors(x)) {
        int k = orbit_of[g.edge_index(x, y)];
        if (!seen_o[k]) {
          seen_o[k] = 1;
          order.push_back(k);
        }
        if (!seen_v[y]) {
          seen_v[y] = 1;
          q.push_back(y);
        }
      }
    }
    for (size_t k = 0; k < orbs.size(); ++k) {
      if (!seen_o[k]) order.push_back(static_cast<int>(k));
    }
  }
  UnionFind uf[2] = {UnionFind(n), UnionFind(n)};
  int used[2] = {0, 0};
  std::vector<char> red(m, 0);
  long nodes = 0;
  bool exhausted = false;
  auto place = [&](int k, int cls) -> int {
    int done = 0;
    for (int e : orbs[k]) {
      if (!uf[cls].unite(g.edges()[e].u, g.edges()[e].v)) {
        for (int i = 0; i < done; ++i) uf[cls].undo();
        return -1;
      }
      ++done;
    }
    return done;
  };
  auto rec = [&](auto&& self, size_t i) -> bool {
    if (i == order.size()) return true;
    if (++nodes > node_limit) {
      exhausted = true;
      return false;
    }
    int k = order[i];
    int sz = static_cast<int>(orbs[k].size());
    for (int cls : {1, 0}) {
      if (used[cls] + sz > n - 1) continue;
      int done = place(k, cls);
      if (done < 0) continue;
      used[cls] += sz;
      for (int e : orbs[k]) red[e] = static_cast<char>(cls);
      if (self(self, i + 1)) return true;
      used[cls] -= sz;
      for (int j = 0; j < done; ++j) uf[cls].undo();
      if (exhausted) return false;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return TwoTreeColoring{red};
}

}  // namespace

std::optional<TwoTreeColoring> search_decomposition(const SymmetricGraph& g, long node_limit) {
  std::optional<TwoTreeColoring> c;
  const GroupName name = g.group().name;
  if (g.group().is_order_two() && g.group().swaps_trees()) {
    c = intersect(g);
  } else if (name == GroupName::C2 || name == GroupName::trivial) {
    c = orbit_search(g, node_limit);
  } else {
    throw InputError("two-tree decompositions are defined for trivial, Ci, Cs and C2 only");
  }
  if (c && !verify_decomposition(g, *c)) throw InternalError("search produced an invalid coloring");
  return c;
}

}  // namespace cylrig
