#include "cylrig/pattern.hpp"

#include <algorithm>
#include <set>

#include "cylrig/error.hpp"

namespace cylrig {

Pattern Pattern::complete(int k) {
  Pattern p;
  p.n = k;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) p.edges.push_back({i, j});
  }
  return p;
}

namespace {

// Visit order in which each vertex after the first of its component touches
// an earlier one.
std::vector<int> connected_order(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    size_t head = order.size();
    order.push_back(s);
    while (head < order.size()) {
      int v = order[head++];
      for (int w : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
      }
    }
  }
  return order;
}

}  // namespace

std::vector<Embedding> find_subgraph(const SymmetricGraph& host, const Pattern& p) {
  if (p.n > 8) throw InputError("pattern larger than 8 vertices");
  std::vector<std::vector<int>> padj(p.n);
  for (const Edge& e : p.edges) {
    padj[e.u].push_back(e.v);
    padj[e.v].push_back(e.u);
  }
  std::vector<int> order = connected_order(p.n, padj);
  std::vector<int> pos(p.n);
  for (int i = 0; i < p.n; ++i) pos[order[i]] = i;

  std::vector<Embedding> out;
  std::set<std::vector<std::pair<int, int>>> copies;
  Embedding map(p.n, -1);
  std::vector<char> used(host.n(), 0);

  auto consistent = [&](int pv) {
    for (int q : padj[pv]) {
      if (map[q] >= 0 && !host.has_edge(map[pv], map[q])) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == p.n) {
      std::vector<std::pair<int, int>> img;
      for (const Edge& e : p.edges) {
        img.push_back(std::minmax(map[e.u], map[e.v]));
      }
      std::sort(img.begin(), img.end());
      if (copies.insert(img).second) out.push_back(map);
      return;
    }
    int pv = order[depth];
    int anchor = -1;
    for (int q : padj[pv]) {
      if (pos[q] < depth) {
        anchor = q;
        break;
      }
    }
    auto try_vertex = [&](int hv) {
      if (used[hv] || host.degree(hv) < static_cast<int>(padj[pv].size())) return;
      map[pv] = hv;
      used[hv] = 1;
      if (consistent(pv)) self(self, depth + 1);
      used[hv] = 0;
      map[pv] = -1;
    };
    if (anchor >= 0) {
      for (int hv : host.neighbors(map[anchor])) try_vertex(hv);
    } else {
      for (int hv = 0; hv < host.n(); ++hv) try_vertex(hv);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Embedding> find_k4(const SymmetricGraph& g) {
  return find_subgraph(g, Pattern::complete(4));
}

std::vector<Embedding> find_k4_minus_edge_through(const SymmetricGraph& g, int u,
                                                  int v) {
  std::vector<Embedding> out;
  if (u == v || g.has_edge(u, v)) return out;
  std::vector<int> common;
  std::set_intersection(g.neighbors(u).begin(), g.neighbors(u).end(),
                        g.neighbors(v).begin(), g.neighbors(v).end(),
                        std::back_inserter(common));
  for (size_t i = 0; i < common.size(); ++i) {
    for (size_t j = i + 1; j < common.size(); ++j) {
      if (g.has_edge(common[i], common[j])) {
        out.push_back({u, v, common[i], common[j]});
      }
    }
  }
  return out;
}

std::vector<std::vector<int>> equivariant_isomorphisms(const SymmetricGraph& a,
                                                       const SymmetricGraph& b,
                                                       size_t limit) {
  std::vector<std::vector<int>> out;
  if (a.n() != b.n() || a.m() != b.m() ||
      a.group().order() != b.group().order()) {
    return out;
  }
  std::vector<int> da(a.n()), db(b.n());
  for (int v = 0; v < a.n(); ++v) da[v] = a.degree(v);
  for (int v = 0; v < b.n(); ++v) db[v] = b.degree(v);
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return out;
  }
  std::vector<std::vector<int>> aadj(a.n());
  for (int v = 0; v < a.n(); ++v) aadj[v] = a.neighbors(v);
  std::vector<int> order = connected_order(a.n(), aadj);
  const int k = a.group().order();

  std::vector<int> f(a.n(), -1), finv(b.n(), -1);
  std::vector<int> trail;

  // Assign v -> w together with the forced images of the whole orbit.
  auto assign = [&](int v, int w) {
    size_t mark = trail.size();
    for (int el = 0; el < k; ++el) {
      int x = a.image(el, v), y = b.image(el, w);
      if (f[x] == y) continue;
      if (f[x] >= 0 || finv[y] >= 0 || da[x] != db[y]) return false;
      for (int z : a.neighbors(x)) {
        if (f[z] >= 0 && !b.has_edge(y, f[z])) return false;
      }
      for (int z : b.neighbors(y)) {
        if (finv[z] >= 0 && !a.has_edge(x, finv[z])) return false;
      }
      f[x] = y;
      finv[y] = x;
      trail.push_back(x);
    }
    (void)mark;
    return true;
  };
  auto undo = [&](size_t mark) {
    while (trail.size() > mark) {
      int x = trail.back();
      trail.pop_back();
      finv[f[x]] = -1;
      f[x] = -1;
    }
  };

  auto rec = [&](auto&& self, size_t depth) -> bool {
    while (depth < order.size() && f[order[depth]] >= 0) ++depth;
    if (depth == order.size()) {
      out.push_back(f);
      return out.size() >= limit;
    }
    int v = order[depth];
    int anchor = -1;
    for (int z : a.neighbors(v)) {
      if (f[z] >= 0) {
        anchor = z;
        break;
      }
    }
    std::vector<int> cands;
    if (anchor >= 0) {
      cands = b.neighbors(f[anchor]);
    } else {
      for (int w = 0; w < b.n(); ++w) cands.push_back(w);
    }
    for (int w : cands) {
      if (finv[w] >= 0) continue;
      size_t mark = trail.size();
      if (assign(v, w)) {
        if (self(self, depth + 1)) return true;
      }
      undo(mark);
    }
    return false;
  };
  rec(rec, 0);
  return out;
}

std::optional<std::vector<int>> equivariant_isomorphism(const SymmetricGraph& a,
                                                        const SymmetricGraph& b) {
  auto all = equivariant_isomorphisms(a, b, 1);
  if (all.empty()) return std::nullopt;
  return all.front();
}

}  // namespace cylrig
