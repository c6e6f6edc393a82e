#include "cylrig/construction.hpp"

#include <algorithm>
#include <unordered_map>

#include "cylrig/catalog.hpp"
#include "cylrig/pattern.hpp"
#include "work.hpp"

namespace cylrig {

Work Work::from(const SymmetricGraph& g) {
  if (g.group().order() != 2) throw InputError("construction needs an order-two group");
  Work w;
  w.group = g.group();
  w.order = g.ids();
  for (int v = 0; v < g.n(); ++v) {
    w.adj[g.id(v)];
    w.mate[g.id(v)] = g.id(g.mate(v));
  }
  for (const Edge& e : g.edges()) {
    w.adj[g.id(e.u)].insert(g.id(e.v));
    w.adj[g.id(e.v)].insert(g.id(e.u));
  }
  return w;
}

SymmetricGraph Work::build() const {
  std::unordered_map<std::string, int> pos;
  for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (size_t i = 0; i < order.size(); ++i) {
    std::vector<int> ns;
    for (const auto& y : adj.at(order[i])) {
      int j = pos.at(y);
      if (j > static_cast<int>(i)) ns.push_back(j);
    }
    std::sort(ns.begin(), ns.end());
    for (int j : ns) edges.push_back({static_cast<int>(i), j});
  }
  std::vector<int> perm(order.size());
  for (size_t i = 0; i < order.size(); ++i) {
    auto it = mate.find(order[i]);
    if (it == mate.end()) throw InternalError("vertex " + order[i] + " has no image");
    perm[i] = pos.at(it->second);
  }
  return SymmetricGraph(group, order, std::move(edges), {std::move(perm)});
}

bool Work::has_edge(const std::string& a, const std::string& b) const {
  auto it = adj.find(a);
  return it != adj.end() && it->second.count(b) > 0;
}

const std::string& Work::img(const std::string& v) const {
  auto it = mate.find(v);
  if (it == mate.end()) throw InputError("unknown vertex '" + v + "'");
  return it->second;
}

const std::set<std::string>& Work::nbrs(const std::string& v) const {
  auto it = adj.find(v);
  if (it == adj.end()) throw InputError("unknown vertex '" + v + "'");
  return it->second;
}

void Work::add_vertex(const std::string& v) {
  if (v.empty()) throw InputError("empty vertex id");
  if (has_vertex(v)) throw InputError("vertex '" + v + "' already exists");
  adj[v];
  order.push_back(v);
}

void Work::add_edge(const std::string& a, const std::string& b) {
  if (a == b) throw InputError("step would create a loop at '" + a + "'");
  if (!has_vertex(a) || !has_vertex(b)) {
    throw InputError("edge " + a + "-" + b + " names an unknown vertex");
  }
  if (!adj[a].insert(b).second) {
    throw InputError("step would create a repeated edge " + a + "-" + b);
  }
  adj[b].insert(a);
}

void Work::remove_edge(const std::string& a, const std::string& b) {
  if (!has_edge(a, b)) throw InputError("edge " + a + "-" + b + " does not exist");
  adj[a].erase(b);
  adj[b].erase(a);
}

void Work::remove_vertex(const std::string& v) {
  for (const auto& y : nbrs(v)) adj[y].erase(v);
  adj.erase(v);
  mate.erase(v);
  order.erase(std::find(order.begin(), order.end(), v));
}

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw InputError(msg);
}

bool is_cs(GroupName g) { return g == GroupName::Cs_axial || g == GroupName::Cs_horizontal; }

struct Visitor {
  Work& w;
  const SymmetricGraph* nested;

  void new_pair(const std::string& v, const std::string& vi) {
    require(v != vi, "new vertex and its image must differ");
    w.add_vertex(v);
    w.add_vertex(vi);
    w.mate[v] = vi;
    w.mate[vi] = v;
  }

  void operator()(const Sym0Ext& s) {
    const auto& [a, b] = s.neighbors;
    require(w.has_vertex(a) && w.has_vertex(b), "Sym0Ext: unknown neighbor");
    require(a != b, "Sym0Ext: neighbors must differ");
    std::string ai = w.img(a), bi = w.img(b);
    new_pair(s.vertex, s.image);
    w.add_edge(s.vertex, a);
    w.add_edge(s.vertex, b);
    w.add_edge(s.image, ai);
    w.add_edge(s.image, bi);
  }

  void operator()(const FixedVertex0Ext& s) {
    require(is_cs(w.group.name), "FixedVertex0Ext needs a Cs group");
    const auto& [a, b] = s.neighbors;
    require(w.has_vertex(a) && w.has_vertex(b), "FixedVertex0Ext: unknown neighbor");
    require(b == w.img(a) && a != b, "FixedVertex0Ext: neighbors must be a swapped pair");
    w.add_vertex(s.vertex);
    w.mate[s.vertex] = s.vertex;
    w.add_edge(s.vertex, a);
    w.add_edge(s.vertex, b);
  }

  void operator()(const Sym1Ext& s) {
    const auto& [x, y] = s.edge;
    require(w.has_edge(x, y), "Sym1Ext: " + x + "-" + y + " is not an edge");
    std::string xi = w.img(x), yi = w.img(y);
    require(!((xi == x && yi == y) || (xi == y && yi == x)),
            "Sym1Ext: removed edge must have an orbit of size two");
    require(w.has_vertex(s.third) && s.third != x && s.third != y,
            "Sym1Ext: third neighbor must be another existing vertex");
    std::string zi = w.img(s.third);
    w.remove_edge(x, y);
    w.remove_edge(xi, yi);
    new_pair(s.vertex, s.image);
    w.add_edge(s.vertex, x);
    w.add_edge(s.vertex, y);
    w.add_edge(s.vertex, s.third);
    w.add_edge(s.image, xi);
    w.add_edge(s.image, yi);
    w.add_edge(s.image, zi);
  }

  void check_attach(const std::map<std::string, std::string>& attach,
                    const std::set<std::string>& nbrs, const std::string& what) {
    require(attach.size() == nbrs.size(), what + ": attach map must cover the neighbors");
    for (const auto& [y, d] : attach) {
      require(nbrs.count(y) > 0, what + ": '" + y + "' is not a neighbor");
    }
  }

  void operator()(const VertexToK4& s) {
    const std::string& wv = s.split;
    require(w.has_vertex(wv), "VertexToK4: unknown vertex '" + wv + "'");
    const std::set<std::string> nw = w.nbrs(wv);
    check_attach(s.attach, nw, "VertexToK4");
    std::array<std::string, 4> k{wv, s.added[0], s.added[1], s.added[2]};
    auto in_k = [&](const std::string& d) {
      return std::find(k.begin(), k.end(), d) != k.end();
    };
    if (s.images && w.img(wv) == wv) {
      // C2: two K4s swapped by the action, glued at the fixed w.
      require(w.group.name == GroupName::C2, "VertexToK4: a K4 pair at a fixed vertex needs C2");
      for (const auto& y : nw) w.remove_edge(wv, y);
      std::array<std::string, 4> ki{wv, (*s.images)[0], (*s.images)[1], (*s.images)[2]};
      for (int i = 0; i < 3; ++i) new_pair(s.added[i], (*s.images)[i]);
      for (const auto& [y, d] : s.attach) {
        require(std::find(ki.begin(), ki.end(), d) != ki.end() || in_k(d),
                "VertexToK4: bad attach target");
        require(s.attach.at(w.img(y)) == w.img(d),
                "VertexToK4: attach map does not commute with the action");
      }
      for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
          w.add_edge(k[i], k[j]);
          w.add_edge(ki[i], ki[j]);
        }
      }
      for (const auto& [y, d] : s.attach) w.add_edge(d, y);
    } else if (s.images) {
      for (const auto& [y, d] : s.attach) require(in_k(d), "VertexToK4: bad attach target");
      const std::string wi = w.img(wv);
      const std::set<std::string> nwi = w.nbrs(wi);
      for (const auto& y : nw) w.remove_edge(wv, y);
      for (const auto& y : nwi) {
        if (w.has_edge(wi, y)) w.remove_edge(wi, y);
      }
      std::array<std::string, 4> ki{wi, (*s.images)[0], (*s.images)[1], (*s.images)[2]};
      for (int i = 0; i < 3; ++i) new_pair(s.added[i], (*s.images)[i]);
      for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
          w.add_edge(k[i], k[j]);
          w.add_edge(ki[i], ki[j]);
        }
      }
      for (const auto& [y, d] : s.attach) {
        if (y == wi) {
          w.add_edge(d, w.img(d));
        } else {
          w.add_edge(d, y);
          w.add_edge(w.img(d), w.img(y));
        }
      }
    } else {
      require(w.group.name == GroupName::C2, "VertexToK4 at a fixed vertex needs C2");
      require(w.img(wv) == wv, "VertexToK4: split vertex is not fixed");
      for (const auto& [y, d] : s.attach) require(in_k(d), "VertexToK4: bad attach target");
      for (const auto& y : nw) w.remove_edge(wv, y);
      for (const auto& a : s.added) w.add_vertex(a);
      w.mate[wv] = s.added[0];
      w.mate[s.added[0]] = wv;
      w.mate[s.added[1]] = s.added[2];
      w.mate[s.added[2]] = s.added[1];
      for (const auto& [y, d] : s.attach) {
        require(s.attach.at(w.img(y)) == w.img(d),
                "VertexToK4: attach map does not commute with the action");
      }
      for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) w.add_edge(k[i], k[j]);
      }
      for (const auto& [y, d] : s.attach) w.add_edge(d, y);
    }
  }

  void operator()(const VertexToC4& s) {
    const std::string& wv = s.split;
    require(w.has_vertex(wv), "VertexToC4: unknown vertex '" + wv + "'");
    const auto& [v1, v2] = s.doubled;
    require(v1 != v2 && w.has_edge(wv, v1) && w.has_edge(wv, v2),
            "VertexToC4: doubled vertices must be two neighbors of the split vertex");
    std::set<std::string> moved(s.moved.begin(), s.moved.end());
    require(moved.size() == s.moved.size(), "VertexToC4: repeated moved vertex");
    for (const auto& m : moved) {
      require(w.has_edge(wv, m) && m != v1 && m != v2,
              "VertexToC4: moved vertex '" + m + "' is not a spare neighbor");
    }
    if (s.image) {
      const std::string wi = w.img(wv);
      std::string v1i = w.img(v1), v2i = w.img(v2);
      if (wi == wv) {
        require(w.group.name == GroupName::C2 || is_cs(w.group.name),
                "VertexToC4: a new pair at a fixed vertex needs C2 or Cs");
        for (const auto& m : moved) {
          const std::string& mi = w.img(m);
          require(!moved.count(mi) && mi != v1 && mi != v2,
                  "VertexToC4: moved vertex '" + m + "' clashes with its image");
        }
      }
      for (const auto& m : moved) {
        if (w.has_edge(wv, m)) w.remove_edge(wv, m);
        std::string mi = w.img(m);
        if (w.has_edge(wi, mi)) w.remove_edge(wi, mi);
      }
      new_pair(s.added, *s.image);
      w.add_edge(s.added, v1);
      w.add_edge(s.added, v2);
      w.add_edge(*s.image, v1i);
      w.add_edge(*s.image, v2i);
      for (const auto& m : moved) {
        if (m == wi) {
          w.add_edge(s.added, *s.image);
        } else {
          w.add_edge(s.added, m);
          w.add_edge(*s.image, w.img(m));
        }
      }
    } else {
      require(is_cs(w.group.name), "VertexToC4 at a fixed vertex needs Cs");
      require(w.img(wv) == wv, "VertexToC4: split vertex is not fixed");
      require(w.img(v1) == v2, "VertexToC4: doubled vertices must be a swapped pair");
      for (const auto& m : moved) {
        require(moved.count(w.img(m)) > 0, "VertexToC4: moved set is not invariant");
      }
      for (const auto& m : moved) w.remove_edge(wv, m);
      w.add_vertex(s.added);
      w.mate[s.added] = s.added;
      w.add_edge(s.added, v1);
      w.add_edge(s.added, v2);
      for (const auto& m : moved) w.add_edge(s.added, m);
    }
  }

  void merge(const SymmetricGraph& h) {
    require(h.group().name == w.group.name, "nested graph has a different group");
    for (int v = 0; v < h.n(); ++v) w.add_vertex(h.id(v));
    for (int v = 0; v < h.n(); ++v) w.mate[h.id(v)] = h.id(h.mate(v));
    for (const Edge& e : h.edges()) w.add_edge(h.id(e.u), h.id(e.v));
  }

  void operator()(const JoinTwoEdges& s) {
    require(w.group.name == GroupName::Ci, "JoinTwoEdges needs Ci");
    require(nested != nullptr, "JoinTwoEdges: missing second graph");
    const auto& [x, y] = s.edge;
    require(w.has_vertex(x), "JoinTwoEdges: unknown vertex '" + x + "'");
    require(nested->index(y).has_value(), "JoinTwoEdges: '" + y + "' not in the second graph");
    std::string xi = w.img(x);
    merge(*nested);
    w.add_edge(x, y);
    w.add_edge(xi, w.img(y));
  }

  void operator()(const Double1Ext& s) {
    require(w.group.name == GroupName::C2, "Double1Ext needs C2");
    const auto& [x, xi] = s.edge;
    require(w.has_edge(x, xi) && x != xi && w.img(x) == xi,
            "Double1Ext: " + x + "-" + xi + " is not a fixed edge");
    require(w.has_vertex(s.other) && s.other != x, "Double1Ext: bad other neighbor");
    std::string yi = w.img(s.other);
    w.remove_edge(x, xi);
    new_pair(s.vertex, s.image);
    w.add_edge(s.vertex, x);
    w.add_edge(s.vertex, s.other);
    w.add_edge(s.vertex, s.image);
    w.add_edge(s.image, xi);
    w.add_edge(s.image, yi);
  }

  void operator()(const VertexToTight& s) {
    require(is_cs(w.group.name), "VertexToTight needs Cs");
    require(nested != nullptr, "VertexToTight: missing block graph");
    const std::string& wv = s.split;
    require(w.has_vertex(wv) && w.img(wv) == wv, "VertexToTight: split vertex must be fixed");
    const std::set<std::string> nw = w.nbrs(wv);
    check_attach(s.attach, nw, "VertexToTight");
    for (const auto& [y, h] : s.attach) {
      auto hi = nested->index(h);
      require(hi.has_value(), "VertexToTight: '" + h + "' not in the block");
      const std::string& yi = w.img(y);
      require(s.attach.at(yi) == nested->id(nested->mate(*hi)),
              "VertexToTight: attach map does not commute with the action");
    }
    w.remove_vertex(wv);
    merge(*nested);
    for (const auto& [y, h] : s.attach) w.add_edge(y, h);
  }
};

const SymmetricGraph* nested_graph(const ConstructionStep& step, std::optional<SymmetricGraph>& store) {
  std::shared_ptr<const Certificate> c;
  if (auto* j = std::get_if<JoinTwoEdges>(&step)) c = j->other;
  if (auto* t = std::get_if<VertexToTight>(&step)) c = t->block;
  if (!c) return nullptr;
  store = replay(*c);
  return &*store;
}

}  // namespace

std::string step_name(const ConstructionStep& s) {
  static const char* names[] = {"Sym0Ext",    "FixedVertex0Ext", "Sym1Ext",    "VertexToK4",
                                "VertexToC4", "JoinTwoEdges",    "Double1Ext", "VertexToTight"};
  return names[s.index()];
}

SymmetricGraph apply_step_with(const SymmetricGraph& g, const ConstructionStep& step,
                               const SymmetricGraph* nested, bool check_tight) {
  if (!g.group().constructible()) {
    throw InputError("necessary conditions only; see characters");
  }
  Work w = Work::from(g);
  std::visit(Visitor{w, nested}, step);
  SymmetricGraph out = w.build();
  auto rep = validate(out);
  if (!rep.ok) throw InputError(step_name(step) + " produced an invalid graph: " + rep.violations.front());
  if (check_tight) {
    bool before = gamma_tight(g).gamma_tight && (!nested || gamma_tight(*nested).gamma_tight);
    if (before && !gamma_tight(out).gamma_tight) {
      // Splitting a fixed vertex into a new pair can unbalance a subgraph.
      auto* c4 = std::get_if<VertexToC4>(&step);
      if (c4 && c4->image && g.index(c4->split) &&
          g.mate(*g.index(c4->split)) == *g.index(c4->split)) {
        throw InputError("VertexToC4: the new pair leaves the graph not gamma-tight");
      }
      throw InternalError(step_name(step) + " broke gamma-tightness");
    }
  }
  return out;
}

SymmetricGraph apply_step(const SymmetricGraph& g, const ConstructionStep& step) {
  std::optional<SymmetricGraph> store;
  const SymmetricGraph* nested = nested_graph(step, store);
  return apply_step_with(g, step, nested);
}

SymmetricGraph base_graph(const Certificate& cert) {
  const CatalogEntry& entry = catalog_entry(cert.base);
  SymmetricGraph g = instantiate(entry, cert.group);
  if (cert.labels.empty()) return g;
  std::vector<std::string> ids;
  std::set<std::string> seen;
  for (const auto& id : g.ids()) {
    auto it = cert.labels.find(id);
    if (it == cert.labels.end()) throw InputError("certificate labels miss base vertex " + id);
    if (!seen.insert(it->second).second) {
      throw InputError("certificate labels repeat id '" + it->second + "'");
    }
    ids.push_back(it->second);
  }
  if (cert.labels.size() != ids.size()) throw InputError("certificate labels name unknown base vertices");
  std::vector<std::vector<int>> perms;
  for (int k = 1; k < g.group().order(); ++k) perms.push_back(g.perm(k));
  return SymmetricGraph(g.group(), std::move(ids), g.edges(), std::move(perms));
}

SymmetricGraph replay(const Certificate& cert) {
  SymmetricGraph g = base_graph(cert);
  for (const auto& step : cert.steps) g = apply_step(g, step);
  return g;
}

bool verify_certificate(const SymmetricGraph& g, const Certificate& cert) {
  if (g.group().name != cert.group) return false;
  SymmetricGraph r;
  try {
    r = replay(cert);
  } catch (const std::exception&) {
    return false;
  }
  if (same_labeled(r, g)) return true;
  return equivariant_isomorphism(r, g).has_value();
}

Certificate certify(const SymmetricGraph& g) {
  if (!g.group().constructible()) {
    throw InputError("necessary conditions only; see characters");
  }
  auto rep = validate(g);
  if (!rep.ok) throw InputError("invalid graph: " + rep.violations.front());
  GammaTightReport gt = gamma_tight(g);
  if (!gt.gamma_tight) {
    std::string why = gt.reasons.empty() ? "not gamma-tight" : gt.reasons.front();
    throw NotTight(why, gt);
  }
  Certificate cert;
  cert.group = g.group().name;
  SymmetricGraph cur = g;
  std::vector<ConstructionStep> rev;
  for (;;) {
    Reduction r = reduce_once(cur);
    if (r.is_base) {
      cert.base = r.base;
      cert.labels = r.labels;
      break;
    }
    ConstructionStep step = *r.step;
    if (r.nested) {
      auto sub = std::make_shared<const Certificate>(certify(*r.nested));
      if (auto* j = std::get_if<JoinTwoEdges>(&step)) j->other = sub;
      if (auto* t = std::get_if<VertexToTight>(&step)) t->block = sub;
    }
    rev.push_back(std::move(step));
    cur = std::move(*r.reduced);
  }
  cert.steps.assign(rev.rbegin(), rev.rend());
  return cert;
}

int certificate_size(const Certificate& cert) {
  int total = static_cast<int>(catalog_entry(cert.base).graph.n());
  for (const auto& s : cert.steps) {
    if (auto* j = std::get_if<JoinTwoEdges>(&s)) total += certificate_size(*j->other);
    if (auto* t = std::get_if<VertexToTight>(&s)) total += certificate_size(*t->block) - 1;
    std::visit([&](const auto& x) {
      using T = std::decay_t<decltype(x)>;
      if constexpr (std::is_same_v<T, Sym0Ext> || std::is_same_v<T, Sym1Ext> ||
                    std::is_same_v<T, Double1Ext>) {
        total += 2;
      } else if constexpr (std::is_same_v<T, FixedVertex0Ext>) {
        total += 1;
      } else if constexpr (std::is_same_v<T, VertexToK4>) {
        total += x.images ? 6 : 3;
      } else if constexpr (std::is_same_v<T, VertexToC4>) {
        total += x.image ? 2 : 1;
      }
    }, s);
  }
  return total;
}

}  // namespace cylrig
