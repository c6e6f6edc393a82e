#include "cylrig/generate.hpp"

#include <algorithm>
#include <set>

#include "cylrig/catalog.hpp"

namespace cylrig {

std::vector<StepKind> step_kinds_for(GroupName group) {
  switch (group) {
    case GroupName::Ci:
      return {StepKind::Sym0Ext, StepKind::Sym1Ext, StepKind::VertexToK4,
              StepKind::VertexToC4, StepKind::JoinTwoEdges};
    case GroupName::C2:
      return {StepKind::Sym0Ext, StepKind::Sym1Ext, StepKind::VertexToK4,
              StepKind::VertexToC4, StepKind::Double1Ext};
    case GroupName::Cs_axial:
    case GroupName::Cs_horizontal:
      return {StepKind::Sym0Ext,    StepKind::FixedVertex0Ext, StepKind::Sym1Ext,
              StepKind::VertexToK4, StepKind::VertexToC4,      StepKind::VertexToTight};
    default:
      return {};
  }
}

std::string step_kind_name(StepKind k) {
  static const char* names[] = {"Sym0Ext",    "FixedVertex0Ext", "Sym1Ext",    "VertexToK4",
                                "VertexToC4", "JoinTwoEdges",    "Double1Ext", "VertexToTight"};
  return names[static_cast<int>(k)];
}

Generator::Generator(GroupName group, std::uint64_t seed) : group_(group), rng_(seed) {}

std::string Generator::fresh() { return "n" + std::to_string(++counter_); }

int Generator::uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

Certificate Generator::random_base() {
  auto entries = catalog_for(group_);
  const CatalogEntry* e = entries[uniform(0, static_cast<int>(entries.size()) - 1)];
  Certificate c;
  c.group = group_;
  c.base = e->key;
  for (const auto& id : e->graph.ids()) c.labels[id] = fresh();
  return c;
}

Generator::Built Generator::small_nested() {
  Certificate c = random_base();
  SymmetricGraph g = replay(c);
  int extra = uniform(0, 2);
  for (int i = 0; i < extra; ++i) {
    static const StepKind simple[] = {StepKind::Sym0Ext, StepKind::Sym1Ext,
                                      StepKind::VertexToC4};
    auto step = random_step(g, simple[uniform(0, 2)]);
    if (!step) continue;
    g = apply_step(g, *step);
    c.steps.push_back(*step);
  }
  return {std::move(g), std::move(c)};
}

std::optional<ConstructionStep> Generator::random_step(const SymmetricGraph& g,
                                                       StepKind kind, int attempts) {
  const int n = g.n();
  auto pick = [&](const std::vector<int>& xs) { return xs[uniform(0, static_cast<int>(xs.size()) - 1)]; };
  std::vector<int> all(n), moving, fixed;
  for (int v = 0; v < n; ++v) {
    all[v] = v;
    (g.mate(v) == v ? fixed : moving).push_back(v);
  }
  std::vector<int> pair_edges, fixed_edges;
  for (int e = 0; e < g.m(); ++e) {
    (g.edge_image(1, e) == e ? fixed_edges : pair_edges).push_back(e);
  }
  auto id = [&](int v) { return g.id(v); };

  for (int t = 0; t < attempts; ++t) {
    std::optional<ConstructionStep> step;
    std::optional<Built> nested;
    switch (kind) {
      case StepKind::Sym0Ext: {
        int a = pick(all), b = pick(all);
        if (a == b) continue;
        step = Sym0Ext{fresh(), fresh(), {id(a), id(b)}};
        break;
      }
      case StepKind::FixedVertex0Ext: {
        if (moving.empty()) return std::nullopt;
        int a = pick(moving);
        step = FixedVertex0Ext{fresh(), {id(a), id(g.mate(a))}};
        break;
      }
      case StepKind::Sym1Ext: {
        if (pair_edges.empty()) return std::nullopt;
        const Edge& e = g.edges()[pick(pair_edges)];
        int z = pick(all);
        if (z == e.u || z == e.v) continue;
        IdPair xy = uniform(0, 1) ? IdPair{id(e.u), id(e.v)} : IdPair{id(e.v), id(e.u)};
        step = Sym1Ext{fresh(), fresh(), xy, id(z)};
        break;
      }
      case StepKind::VertexToK4: {
        int w = pick(all);
        bool wf = g.mate(w) == w;
        if (wf && group_ != GroupName::C2) continue;
        std::array<std::string, 3> added{fresh(), fresh(), fresh()};
        std::array<std::string, 4> k{id(w), added[0], added[1], added[2]};
        std::map<std::string, std::string> attach;
        if (!wf) {
          for (int y : g.neighbors(w)) attach[id(y)] = k[uniform(0, 3)];
          step = VertexToK4{id(w), added, std::array<std::string, 3>{fresh(), fresh(), fresh()},
                            attach};
        } else if (uniform(0, 1)) {
          // two swapped K4s glued at w
          std::array<std::string, 3> images{fresh(), fresh(), fresh()};
          std::array<std::string, 7> targets{id(w),     added[0],  added[1], added[2],
                                             images[0], images[1], images[2]};
          static const int img7[7] = {0, 4, 5, 6, 1, 2, 3};
          for (int y : g.neighbors(w)) {
            if (attach.count(id(y))) continue;
            int d = uniform(0, 6);
            attach[id(y)] = targets[d];
            attach[id(g.mate(y))] = targets[img7[d]];
          }
          step = VertexToK4{id(w), added, images, attach};
        } else {
          // K4 action: w<->a, b<->c
          static const int swap4[4] = {1, 0, 3, 2};
          for (int y : g.neighbors(w)) {
            if (attach.count(id(y))) continue;
            int d = uniform(0, 3);
            attach[id(y)] = k[d];
            attach[id(g.mate(y))] = k[swap4[d]];
          }
          step = VertexToK4{id(w), added, std::nullopt, attach};
        }
        break;
      }
      case StepKind::VertexToC4: {
        int w = pick(all);
        bool wf = g.mate(w) == w;
        std::vector<int> nb = g.neighbors(w);
        if (nb.size() < 2) continue;
        std::shuffle(nb.begin(), nb.end(), rng_);
        if (!wf) {
          std::vector<std::string> moved;
          for (size_t i = 2; i < nb.size(); ++i) {
            if (uniform(0, 1)) moved.push_back(id(nb[i]));
          }
          step = VertexToC4{id(w), fresh(), fresh(), {id(nb[0]), id(nb[1])}, moved};
        } else if (uniform(0, 1)) {
          // new pair u, u' at the fixed vertex
          std::set<int> used{nb[0], nb[1], g.mate(nb[0]), g.mate(nb[1])};
          std::vector<std::string> moved;
          for (size_t i = 2; i < nb.size(); ++i) {
            if (used.count(nb[i]) || !uniform(0, 1)) continue;
            used.insert(nb[i]);
            used.insert(g.mate(nb[i]));
            moved.push_back(id(nb[i]));
          }
          step = VertexToC4{id(w), fresh(), fresh(), {id(nb[0]), id(nb[1])}, moved};
        } else {
          if (group_ == GroupName::C2 || group_ == GroupName::Ci) continue;
          int v1 = nb[0];
          if (g.mate(v1) == v1) continue;
          std::vector<std::string> moved;
          std::set<int> done{v1, g.mate(v1)};
          for (int y : nb) {
            if (done.count(y)) continue;
            done.insert(y);
            done.insert(g.mate(y));
            if (uniform(0, 1)) {
              moved.push_back(id(y));
              if (g.mate(y) != y) moved.push_back(id(g.mate(y)));
            }
          }
          step = VertexToC4{id(w), fresh(), std::nullopt, {id(v1), id(g.mate(v1))}, moved};
        }
        break;
      }
      case StepKind::JoinTwoEdges: {
        if (group_ != GroupName::Ci) return std::nullopt;
        nested = small_nested();
        int x = pick(all);
        const SymmetricGraph& h = nested->graph;
        const std::string& y = h.id(uniform(0, h.n() - 1));
        step = JoinTwoEdges{std::make_shared<const Certificate>(nested->certificate), {id(x), y}};
        break;
      }
      case StepKind::Double1Ext: {
        if (group_ != GroupName::C2 || fixed_edges.empty()) return std::nullopt;
        const Edge& e = g.edges()[pick(fixed_edges)];
        int x = uniform(0, 1) ? e.u : e.v;
        int y = pick(all);
        if (y == x) continue;
        step = Double1Ext{{id(x), id(g.mate(x))}, fresh(), fresh(), id(y)};
        break;
      }
      case StepKind::VertexToTight: {
        if (fixed.empty()) return std::nullopt;
        int w = pick(fixed);
        nested = small_nested();
        const SymmetricGraph& h = nested->graph;
        std::map<std::string, std::string> attach;
        for (int y : g.neighbors(w)) {
          if (attach.count(id(y))) continue;
          int hv = uniform(0, h.n() - 1);
          attach[id(y)] = h.id(hv);
          attach[id(g.mate(y))] = h.id(h.mate(hv));
        }
        step = VertexToTight{id(w), std::make_shared<const Certificate>(nested->certificate),
                             attach};
        break;
      }
    }
    if (!step) continue;
    try {
      apply_step_with(g, *step, nested ? &nested->graph : nullptr);
      return step;
    } catch (const InputError&) {
      continue;
    }
  }
  return std::nullopt;
}

Generator::Built Generator::random_tight(int min_vertices, int max_vertices) {
  Certificate cert = random_base();
  SymmetricGraph g = replay(cert);
  std::vector<StepKind> kinds = step_kinds_for(group_);
  std::vector<int> weights;
  for (StepKind k : kinds) weights.push_back(k == StepKind::Sym1Ext ? 4 : k == StepKind::VertexToC4 ? 2 : 1);
  std::discrete_distribution<int> choose(weights.begin(), weights.end());
  int target = uniform(min_vertices, max_vertices);
  int guard = 0;
  while (g.n() < target && guard++ < 1000) {
    StepKind k = kinds[choose(rng_)];
    bool big = k == StepKind::JoinTwoEdges || k == StepKind::VertexToTight ||
               k == StepKind::VertexToK4;
    if (big && g.n() + 6 > max_vertices) continue;
    auto step = random_step(g, k);
    if (!step) continue;
    SymmetricGraph h = apply_step(g, *step);
    if (h.n() > max_vertices) continue;
    g = std::move(h);
    cert.steps.push_back(*step);
  }
  return {std::move(g), std::move(cert)};
}

SymmetricGraph Generator::perturb(const SymmetricGraph& g) {
  Orbits orb = orbits(g);
  const int k = g.group().order();
  for (int t = 0; t < 200; ++t) {
    const auto& drop = orb.edge_orbits[uniform(0, static_cast<int>(orb.edge_orbits.size()) - 1)];
    int a = uniform(0, g.n() - 1), b = uniform(0, g.n() - 1);
    if (a == b || g.has_edge(a, b)) continue;
    std::set<std::pair<int, int>> added;
    for (int el = 0; el < k; ++el) {
      added.insert(std::minmax(g.image(el, a), g.image(el, b)));
    }
    if (std::any_of(added.begin(), added.end(), [](auto p) { return p.first == p.second; })) continue;
    std::vector<char> gone(g.m(), 0);
    for (int e : drop) gone[e] = 1;
    std::vector<Edge> es;
    for (int e = 0; e < g.m(); ++e) {
      if (!gone[e]) es.push_back(g.edges()[e]);
    }
    for (auto [u, v] : added) es.push_back({u, v});
    std::vector<std::vector<int>> perms;
    for (int el = 1; el < k; ++el) perms.push_back(g.perm(el));
    return SymmetricGraph(g.group(), g.ids(), std::move(es), std::move(perms));
  }
  return g;
}

}  // namespace cylrig
