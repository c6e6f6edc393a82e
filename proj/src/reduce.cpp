#include <algorithm>
#include <set>

#include "cylrig/catalog.hpp"
#include "cylrig/construction.hpp"
#include "cylrig/pattern.hpp"
#include "work.hpp"

namespace cylrig {

namespace {

using EdgeSet = std::set<std::pair<std::string, std::string>>;

std::pair<std::string, std::string> ordered(const std::string& a, const std::string& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

// Adds the edges, failing on loops or edges already present.
bool add_all(Work& w, const EdgeSet& es) {
  for (const auto& [a, b] : es) {
    if (a == b || w.has_edge(a, b)) return false;
    w.add_edge(a, b);
  }
  return true;
}

class Reducer {
 public:
  explicit Reducer(const SymmetricGraph& g) : g_(g), gw_(Work::from(g)) {}

  Reduction run() {
    if (base() || degree_two() || tight_block() || node_one() || double_one() ||
        k4_contraction() || c4_contraction() || separation()) {
      return out_;
    }
    throw InternalExhaustion("no reduction candidate validates for a gamma-tight " +
                                 group_name_str(g_.group().name) + " graph on " +
                                 std::to_string(g_.n()) + " vertices",
                             g_);
  }

 private:
  bool cs() const {
    return g_.group().name == GroupName::Cs_axial ||
           g_.group().name == GroupName::Cs_horizontal;
  }
  const std::string& id(int v) const { return g_.id(v); }

  bool attempt(const Work& reduced, ConstructionStep step,
               std::optional<SymmetricGraph> nested = std::nullopt) {
    SymmetricGraph r = reduced.build();
    if (!validate(r).ok || !gamma_tight(r).gamma_tight) return false;
    if (nested && !gamma_tight(*nested).gamma_tight) return false;
    try {
      SymmetricGraph back =
          apply_step_with(r, step, nested ? &*nested : nullptr, false);
      if (!same_labeled(back, g_)) return false;
    } catch (const InputError&) {
      return false;
    }
    out_.reduced = std::move(r);
    out_.step = std::move(step);
    out_.nested = std::move(nested);
    return true;
  }

  bool base() {
    for (const CatalogEntry* e : catalog_for(g_.group().name)) {
      if (e->graph.n() != g_.n() || e->graph.m() != g_.m()) continue;
      auto isos = find_pattern(g_, *e, 1);
      if (isos.empty()) continue;
      out_.is_base = true;
      out_.base = e->key;
      for (int i = 0; i < e->graph.n(); ++i) out_.labels[e->graph.id(i)] = id(isos[0][i]);
      return true;
    }
    return false;
  }

  bool degree_two() {
    for (int v = 0; v < g_.n(); ++v) {
      if (g_.degree(v) != 2) continue;
      int vi = g_.mate(v);
      const auto& nb = g_.neighbors(v);
      std::array<std::string, 2> ns{id(nb[0]), id(nb[1])};
      Work r = gw_;
      if (vi == v) {
        if (!cs()) continue;
        r.remove_vertex(id(v));
        if (attempt(r, FixedVertex0Ext{id(v), ns})) return true;
      } else {
        if (g_.has_edge(v, vi)) continue;
        r.remove_vertex(id(v));
        r.remove_vertex(id(vi));
        if (attempt(r, Sym0Ext{id(v), id(vi), ns})) return true;
      }
    }
    return false;
  }

  std::string fresh_id(const std::string& stem) const {
    for (int k = 1;; ++k) {
      std::string s = stem + std::to_string(k);
      if (!g_.index(s)) return s;
    }
  }

  // Contract a proper invariant tight subgraph to one fixed vertex.
  bool tight_block() {
    if (!cs()) return false;
    std::set<std::vector<int>> tried;
    Orbits orb = orbits(g_);
    for (const auto& eo : orb.edge_orbits) {
      const Edge& e = g_.edges()[eo.front()];
      std::vector<int> seed{e.u, e.v, g_.mate(e.u), g_.mate(e.v)};
      std::sort(seed.begin(), seed.end());
      seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
      std::vector<int> f = min_tight_superset(g_, seed);
      std::vector<char> in(g_.n(), 0);
      for (int x : f) in[x] = 1;
      for (bool grew = true; grew;) {
        grew = false;
        for (int z = 0; z < g_.n(); ++z) {
          if (in[z]) continue;
          int c = 0;
          for (int y : g_.neighbors(z)) c += in[y];
          if (c >= 2) {
            in[z] = 1;
            grew = true;
          }
        }
      }
      f.clear();
      for (int v = 0; v < g_.n(); ++v) {
        if (in[v]) f.push_back(v);
      }
      if (static_cast<int>(f.size()) >= g_.n() || f.size() < 4) continue;
      if (!tried.insert(f).second) continue;
      bool invariant = std::all_of(f.begin(), f.end(), [&](int v) { return in[g_.mate(v)]; });
      if (!invariant) continue;
      std::string w = fresh_id("t");
      Work r = gw_;
      std::map<std::string, std::string> attach;
      EdgeSet add;
      for (int v : f) {
        for (int z : g_.neighbors(v)) {
          if (!in[z]) {
            attach[id(z)] = id(v);
            add.insert(ordered(w, id(z)));
          }
        }
      }
      for (int v : f) r.remove_vertex(id(v));
      r.add_vertex(w);
      r.mate[w] = w;
      if (!add_all(r, add)) continue;
      if (attempt(r, VertexToTight{w, nullptr, attach}, induced_subgraph(g_, f))) return true;
    }
    return false;
  }

  bool node_one() {
    for (int v = 0; v < g_.n(); ++v) {
      if (g_.degree(v) != 3) continue;
      int vi = g_.mate(v);
      if (vi == v || g_.has_edge(v, vi)) continue;
      const auto& nb = g_.neighbors(v);
      static const int pairs[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
      for (const auto& p : pairs) {
        int a = nb[p[0]], b = nb[p[1]], c = nb[p[2]];
        if (g_.has_edge(a, b)) continue;
        int ai = g_.mate(a), bi = g_.mate(b);
        if (std::minmax(ai, bi) == std::minmax(a, b)) continue;
        if (g_.has_edge(ai, bi)) continue;
        Work r = gw_;
        r.remove_vertex(id(v));
        r.remove_vertex(id(vi));
        r.add_edge(id(a), id(b));
        r.add_edge(id(ai), id(bi));
        if (attempt(r, Sym1Ext{id(v), id(vi), {id(a), id(b)}, id(c)})) return true;
      }
    }
    return false;
  }

  bool double_one() {
    if (g_.group().name != GroupName::C2) return false;
    for (int v = 0; v < g_.n(); ++v) {
      int vi = g_.mate(v);
      if (g_.degree(v) != 3 || vi == v || !g_.has_edge(v, vi)) continue;
      std::vector<int> others;
      for (int x : g_.neighbors(v)) {
        if (x != vi) others.push_back(x);
      }
      for (int k = 0; k < 2; ++k) {
        int p = others[k], q = others[1 - k];
        int pi = g_.mate(p);
        if (pi == p || g_.has_edge(p, pi)) continue;
        Work r = gw_;
        r.remove_vertex(id(v));
        r.remove_vertex(id(vi));
        r.add_edge(id(p), id(pi));
        if (attempt(r, Double1Ext{{id(p), id(pi)}, id(v), id(vi), id(q)})) return true;
      }
    }
    return false;
  }

  bool k4_contraction() {
    for (Embedding x : find_k4(g_)) {
      std::sort(x.begin(), x.end());
      std::vector<char> in(g_.n(), 0), in_img(g_.n(), 0);
      for (int v : x) {
        in[v] = 1;
        in_img[g_.mate(v)] = 1;
      }
      int overlap = 0;
      for (int v : x) overlap += in_img[v];
      if (overlap == 0) {
        if (try_k4_pair(x, in, in_img)) return true;
      } else if (overlap == 4 && g_.group().name == GroupName::C2) {
        if (try_k4_fixed(x, in)) return true;
      } else if (overlap == 1 && g_.group().name == GroupName::C2) {
        if (try_k4_fixed_pair(x, in, in_img)) return true;
      }
    }
    return false;
  }

  bool try_k4_pair(const Embedding& x, const std::vector<char>& in,
                   const std::vector<char>& in_img) {
    const std::string w = id(x[0]), wi = id(g_.mate(x[0]));
    std::map<std::string, std::string> attach;
    for (int p : x) {
      for (int q : g_.neighbors(p)) {
        if (in[q]) continue;
        std::string key = in_img[q] ? wi : id(q);
        if (!attach.emplace(key, id(p)).second) return false;
      }
    }
    Work r = gw_;
    for (int i = 1; i < 4; ++i) {
      r.remove_vertex(id(x[i]));
      r.remove_vertex(id(g_.mate(x[i])));
    }
    for (const auto& y : std::set<std::string>(r.nbrs(w))) r.remove_edge(w, y);
    for (const auto& y : std::set<std::string>(r.nbrs(wi))) r.remove_edge(wi, y);
    EdgeSet add;
    for (const auto& [key, p] : attach) {
      add.insert(ordered(w, key));
      if (key != wi) add.insert(ordered(wi, r.img(key)));
    }
    if (!add_all(r, add)) return false;
    std::array<std::string, 3> added{id(x[1]), id(x[2]), id(x[3])};
    std::array<std::string, 3> images{id(g_.mate(x[1])), id(g_.mate(x[2])),
                                      id(g_.mate(x[3]))};
    return attempt(r, VertexToK4{w, added, images, attach});
  }

  bool try_k4_fixed(const Embedding& x, const std::vector<char>& in) {
    int w = x[0];
    int a = g_.mate(w);
    if (a == w) return false;
    int b = -1;
    for (int v : x) {
      if (v != w && v != a) {
        b = v;
        break;
      }
    }
    int c = g_.mate(b);
    if (c == b) return false;
    std::map<std::string, std::string> attach;
    for (int p : x) {
      for (int q : g_.neighbors(p)) {
        if (in[q]) continue;
        if (!attach.emplace(id(q), id(p)).second) return false;
      }
    }
    Work r = gw_;
    for (int v : {a, b, c}) r.remove_vertex(id(v));
    for (const auto& y : std::set<std::string>(r.nbrs(id(w)))) r.remove_edge(id(w), y);
    r.mate[id(w)] = id(w);
    EdgeSet add;
    for (const auto& [key, p] : attach) add.insert(ordered(id(w), key));
    if (!add_all(r, add)) return false;
    return attempt(r, VertexToK4{id(w), {id(a), id(b), id(c)}, std::nullopt, attach});
  }

  // X and X' meet in the fixed vertex t; both contract into t.
  bool try_k4_fixed_pair(const Embedding& x, const std::vector<char>& in,
                         const std::vector<char>& in_img) {
    int t = -1;
    for (int v : x) {
      if (g_.mate(v) == v) t = v;
    }
    if (t < 0) return false;
    std::vector<int> rest;
    for (int v : x) {
      if (v != t) rest.push_back(v);
    }
    std::map<std::string, std::string> attach;
    for (int p : x) {
      for (int q : g_.neighbors(p)) {
        if (in[q]) continue;
        if (in_img[q]) {
          if (p != t) return false;
          continue;
        }
        auto [it, fresh] = attach.emplace(id(q), id(p));
        if (!fresh && it->second != id(p)) return false;
        auto [jt, fresh_img] = attach.emplace(id(g_.mate(q)), id(g_.mate(p)));
        if (!fresh_img && jt->second != id(g_.mate(p))) return false;
      }
    }
    Work r = gw_;
    for (int v : rest) {
      r.remove_vertex(id(v));
      r.remove_vertex(id(g_.mate(v)));
    }
    EdgeSet add;
    for (const auto& [key, p] : attach) {
      if (p != id(t)) add.insert(ordered(id(t), key));
    }
    if (!add_all(r, add)) return false;
    std::array<std::string, 3> added{id(rest[0]), id(rest[1]), id(rest[2])};
    std::array<std::string, 3> images{id(g_.mate(rest[0])), id(g_.mate(rest[1])),
                                      id(g_.mate(rest[2]))};
    return attempt(r, VertexToK4{id(t), added, images, attach});
  }

  bool c4_contraction() {
    for (int w = 0; w < g_.n(); ++w) {
      for (int u = 0; u < g_.n(); ++u) {
        if (u == w || g_.has_edge(u, w)) continue;
        std::vector<int> common;
        std::set_intersection(g_.neighbors(u).begin(), g_.neighbors(u).end(),
                              g_.neighbors(w).begin(), g_.neighbors(w).end(),
                              std::back_inserter(common));
        if (common.size() != 2) continue;
        bool wf = g_.mate(w) == w, uf = g_.mate(u) == u;
        if (!wf && !uf) {
          if (try_c4_pair(w, u, common)) return true;
        } else if (wf && uf && cs()) {
          if (try_c4_fixed(w, u, common)) return true;
        } else if (wf && !uf) {
          if (try_c4_fixed_pair(w, u, common)) return true;
        }
      }
    }
    return false;
  }

  bool try_c4_pair(int w, int u, const std::vector<int>& common) {
    int wi = g_.mate(w), ui = g_.mate(u);
    if (u == wi) return false;
    auto merged = [&](int q) { return q == u ? w : q == ui ? wi : q; };
    std::vector<std::string> moved;
    EdgeSet add;
    for (int q : g_.neighbors(u)) {
      if (q == common[0] || q == common[1]) continue;
      int mq = merged(q);
      moved.push_back(id(mq));
      add.insert(ordered(id(w), id(mq)));
      add.insert(ordered(id(wi), id(merged(g_.mate(q)))));
    }
    Work r = gw_;
    r.remove_vertex(id(u));
    r.remove_vertex(id(ui));
    if (!add_all(r, add)) return false;
    return attempt(r, VertexToC4{id(w), id(u), id(ui), {id(common[0]), id(common[1])}, moved});
  }

  bool try_c4_fixed(int w, int u, const std::vector<int>& common) {
    if (g_.mate(common[0]) != common[1]) return false;
    std::vector<std::string> moved;
    EdgeSet add;
    for (int q : g_.neighbors(u)) {
      if (q == common[0] || q == common[1]) continue;
      moved.push_back(id(q));
      add.insert(ordered(id(w), id(q)));
    }
    Work r = gw_;
    r.remove_vertex(id(u));
    if (!add_all(r, add)) return false;
    return attempt(r, VertexToC4{id(w), id(u), std::nullopt, {id(common[0]), id(common[1])},
                                 moved});
  }

  // u and u' both merge into the fixed vertex w.
  bool try_c4_fixed_pair(int w, int u, const std::vector<int>& common) {
    int ui = g_.mate(u);
    if (g_.has_edge(u, ui)) return false;
    std::vector<std::string> moved;
    EdgeSet add;
    for (int q : g_.neighbors(u)) {
      if (q == common[0] || q == common[1]) continue;
      moved.push_back(id(q));
      add.insert(ordered(id(w), id(q)));
      add.insert(ordered(id(w), id(g_.mate(q))));
    }
    Work r = gw_;
    r.remove_vertex(id(u));
    r.remove_vertex(id(ui));
    if (!add_all(r, add)) return false;
    return attempt(r, VertexToC4{id(w), id(u), id(ui), {id(common[0]), id(common[1])}, moved});
  }

  bool separation() {
    if (g_.group().name != GroupName::Ci) return false;
    Orbits orb = orbits(g_);
    for (const auto& eo : orb.edge_orbits) {
      if (eo.size() != 2) continue;
      std::vector<int> comp(g_.n(), -1);
      int ncomp = 0;
      for (int s = 0; s < g_.n(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
          int x = stack.back();
          stack.pop_back();
          for (int y : g_.neighbors(x)) {
            int e = g_.edge_index(x, y);
            if (e == eo[0] || e == eo[1] || comp[y] >= 0) continue;
            comp[y] = ncomp;
            stack.push_back(y);
          }
        }
        ++ncomp;
      }
      if (ncomp != 2) continue;
      bool invariant = true;
      for (int v = 0; v < g_.n(); ++v) invariant &= comp[v] == comp[g_.mate(v)];
      if (!invariant) continue;
      const Edge& e = g_.edges()[eo[0]];
      if (comp[e.u] == comp[e.v]) continue;
      int x = comp[e.u] == 0 ? e.u : e.v;
      int y = x == e.u ? e.v : e.u;
      std::vector<int> second;
      Work r = gw_;
      for (int v = 0; v < g_.n(); ++v) {
        if (comp[v] == 1) {
          second.push_back(v);
          r.remove_vertex(id(v));
        }
      }
      if (attempt(r, JoinTwoEdges{nullptr, {id(x), id(y)}}, induced_subgraph(g_, second))) {
        return true;
      }
    }
    return false;
  }

  const SymmetricGraph& g_;
  Work gw_;
  Reduction out_;
};

}  // namespace

Reduction reduce_once(const SymmetricGraph& g) {
  if (!g.group().constructible()) {
    throw InputError("necessary conditions only; see characters");
  }
  GammaTightReport gt = gamma_tight(g);
  if (!gt.gamma_tight) {
    throw NotTight(gt.reasons.empty() ? "not gamma-tight" : gt.reasons.front(), gt);
  }
  return Reducer(g).run();
}

}  // namespace cylrig
