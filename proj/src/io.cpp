#include "cylrig/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "cylrig/error.hpp"

namespace cylrig {

namespace {

const Json& field(const Json& j, const char* name, const std::string& where) {
  if (!j.is_object() || !j.contains(name)) {
    throw InputError(where + ": missing field \"" + name + "\"");
  }
  return j.at(name);
}

std::string str(const Json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where + ": expected a string, got " + j.dump());
  return j.get<std::string>();
}

IdPair pair_of(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw InputError(where + ": expected a pair of ids");
  return {str(j[0], where), str(j[1], where)};
}

std::map<std::string, std::string> string_map(const Json& j, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : j.items()) out[k] = str(v, where);
  return out;
}

std::vector<std::string> string_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(str(x, where));
  return out;
}

}  // namespace

SymmetricGraph parse_document(const Json& doc) {
  if (!doc.is_object()) throw InputError("document: expected a JSON object");
  std::string gname = str(field(doc, "group", "document"), "group");
  auto name = parse_group_name(gname);
  if (!name) throw InputError("document: unknown group '" + gname + "'");
  GroupSpec group = GroupSpec::make(*name);

  std::vector<std::string> ids = string_list(field(doc, "vertices", "document"), "vertices");
  std::set<std::string> seen;
  for (const auto& v : ids) {
    if (!seen.insert(v).second) throw InputError("vertices: repeated id '" + v + "'");
  }
  const Json& ej = field(doc, "edges", "document");
  if (!ej.is_array()) throw InputError("edges: expected an array");
  std::vector<IdPair> edges;
  for (const auto& e : ej) {
    IdPair p = pair_of(e, "edges");
    for (const auto& v : {p.first, p.second}) {
      if (!seen.count(v)) throw InputError("edges: edge " + p.first + "-" + p.second +
                                           " names unknown vertex '" + v + "'");
    }
    edges.push_back(p);
  }

  const Json empty = Json::object();
  const Json& aj = group.order() > 1 ? field(doc, "action", "document")
                                     : (doc.contains("action") ? doc.at("action") : empty);
  if (!aj.is_object()) throw InputError("action: expected an object");
  for (const auto& [label, m] : aj.items()) {
    if (group.index_of_label(label) < 0) {
      throw InputError("action: label '" + label + "' is not an element of " + gname);
    }
  }
  // element index -> vertex index permutation
  std::vector<std::vector<int>> perm(group.order());
  std::map<std::string, int> pos;
  for (size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = static_cast<int>(i);
  auto read = [&](const std::string& label) {
    auto m = string_map(aj.at(label), "action." + label);
    std::vector<int> p(ids.size(), -1);
    for (const auto& [from, to] : m) {
      if (!pos.count(from) || !pos.count(to)) {
        throw InputError("action." + label + ": unknown vertex in " + from + " -> " + to);
      }
      p[pos[from]] = pos[to];
    }
    for (size_t i = 0; i < ids.size(); ++i) {
      if (p[i] < 0) throw InputError("action." + label + ": no image for vertex '" + ids[i] + "'");
    }
    return p;
  };
  perm[0].resize(ids.size());
  for (size_t i = 0; i < ids.size(); ++i) perm[0][i] = static_cast<int>(i);
  for (const auto& [label, m] : aj.items()) perm[group.index_of_label(label)] = read(label);
  // Derive the rest by composition.
  for (bool grew = true; grew;) {
    grew = false;
    for (int a = 1; a < group.order(); ++a) {
      for (int b = 1; b < group.order(); ++b) {
        int c = group.compose(a, b);
        if (perm[a].empty() || perm[b].empty() || !perm[c].empty()) continue;
        perm[c].resize(ids.size());
        for (size_t i = 0; i < ids.size(); ++i) perm[c][i] = perm[a][perm[b][i]];
        grew = true;
      }
    }
  }
  for (int k = 1; k < group.order(); ++k) {
    if (!perm[k].empty()) continue;
    std::string need;
    for (const auto& label : group.generator_labels()) {
      need += (need.empty() ? "\"" : ", \"") + label + "\"";
    }
    throw InputError("action: group " + gname + " needs generator(s) " + need);
  }
  for (int a = 1; a < group.order(); ++a) {
    for (int b = 1; b < group.order(); ++b) {
      int c = group.compose(a, b);
      for (size_t i = 0; i < ids.size(); ++i) {
        if (perm[c][i] != perm[a][perm[b][i]]) {
          throw InputError("action: " + group.labels[a] + " after " + group.labels[b] +
                           " does not give " + group.labels[c] + " at vertex '" + ids[i] + "'");
        }
      }
    }
  }
  std::vector<std::map<std::string, std::string>> action;
  for (int k = 1; k < group.order(); ++k) {
    std::map<std::string, std::string> m;
    for (size_t i = 0; i < ids.size(); ++i) m[ids[i]] = ids[perm[k][i]];
    action.push_back(std::move(m));
  }
  SymmetricGraph g = SymmetricGraph::from_ids(group, ids, edges, action);
  ValidationReport rep = validate(g);
  if (!rep.ok) {
    std::string msg = "invalid graph: " + rep.violations.front();
    for (size_t i = 1; i < rep.violations.size(); ++i) msg += "; " + rep.violations[i];
    throw InputError(msg);
  }
  return g;
}

SymmetricGraph parse_document(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_document(doc);
}

SymmetricGraph load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

Json document_json(const SymmetricGraph& g) {
  std::vector<std::string> ids = g.ids();
  std::sort(ids.begin(), ids.end(), id_less);
  std::vector<IdPair> edges;
  for (int e = 0; e < g.m(); ++e) {
    auto [a, b] = g.edge_ids(e);
    if (id_less(b, a)) std::swap(a, b);
    edges.emplace_back(a, b);
  }
  std::sort(edges.begin(), edges.end(), [](const IdPair& x, const IdPair& y) {
    if (x.first != y.first) return id_less(x.first, y.first);
    return id_less(x.second, y.second);
  });
  Json doc;
  doc["group"] = group_name_str(g.group().name);
  doc["vertices"] = ids;
  Json ej = Json::array();
  for (const auto& [a, b] : edges) ej.push_back({a, b});
  doc["edges"] = ej;
  Json action = Json::object();
  for (int k = 1; k < g.group().order(); ++k) {
    Json m = Json::object();
    for (const auto& id : ids) m[id] = g.id(g.image(k, g.index_or_throw(id)));
    action[g.group().labels[k]] = m;
  }
  doc["action"] = action;
  return doc;
}

std::string serialize_document(const SymmetricGraph& g) { return document_json(g).dump(2) + "\n"; }

namespace {

Json step_json(const ConstructionStep& step) {
  Json p;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Sym0Ext>) {
          p = {{"vertex", s.vertex}, {"image", s.image}, {"neighbors", s.neighbors}};
        } else if constexpr (std::is_same_v<T, FixedVertex0Ext>) {
          p = {{"vertex", s.vertex}, {"neighbors", s.neighbors}};
        } else if constexpr (std::is_same_v<T, Sym1Ext>) {
          p = {{"vertex", s.vertex},
               {"image", s.image},
               {"edge", {s.edge.first, s.edge.second}},
               {"third", s.third}};
        } else if constexpr (std::is_same_v<T, VertexToK4>) {
          p = {{"split", s.split}, {"added", s.added}};
          if (s.images) p["images"] = *s.images;
          p["attach"] = s.attach;
        } else if constexpr (std::is_same_v<T, VertexToC4>) {
          p = {{"split", s.split}, {"added", s.added}};
          if (s.image) p["image"] = *s.image;
          p["doubled"] = {s.doubled.first, s.doubled.second};
          p["moved"] = s.moved;
        } else if constexpr (std::is_same_v<T, JoinTwoEdges>) {
          p = {{"other", certificate_json(*s.other)}, {"edge", {s.edge.first, s.edge.second}}};
        } else if constexpr (std::is_same_v<T, Double1Ext>) {
          p = {{"edge", {s.edge.first, s.edge.second}},
               {"vertex", s.vertex},
               {"image", s.image},
               {"other", s.other}};
        } else if constexpr (std::is_same_v<T, VertexToTight>) {
          p = {{"split", s.split}, {"block", certificate_json(*s.block)}, {"attach", s.attach}};
        }
      },
      step);
  return {{"variant", step_name(step)}, {"params", p}};
}

template <size_t N>
std::array<std::string, N> str_array(const Json& j, const std::string& where) {
  auto v = string_list(j, where);
  if (v.size() != N) throw InputError(where + ": expected " + std::to_string(N) + " ids");
  std::array<std::string, N> out;
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

ConstructionStep parse_step(const Json& j) {
  std::string variant = str(field(j, "variant", "step"), "variant");
  const Json& p = field(j, "params", "step");
  const std::string w = variant;
  auto s = [&](const char* k) { return str(field(p, k, w), w + "." + k); };
  if (variant == "Sym0Ext") {
    return Sym0Ext{s("vertex"), s("image"), str_array<2>(field(p, "neighbors", w), w)};
  }
  if (variant == "FixedVertex0Ext") {
    return FixedVertex0Ext{s("vertex"), str_array<2>(field(p, "neighbors", w), w)};
  }
  if (variant == "Sym1Ext") {
    return Sym1Ext{s("vertex"), s("image"), pair_of(field(p, "edge", w), w), s("third")};
  }
  if (variant == "VertexToK4") {
    VertexToK4 st{s("split"), str_array<3>(field(p, "added", w), w), std::nullopt,
                  string_map(field(p, "attach", w), w)};
    if (p.contains("images")) st.images = str_array<3>(p.at("images"), w);
    return st;
  }
  if (variant == "VertexToC4") {
    VertexToC4 st{s("split"), s("added"), std::nullopt, pair_of(field(p, "doubled", w), w),
                  string_list(field(p, "moved", w), w)};
    if (p.contains("image")) st.image = str(p.at("image"), w);
    return st;
  }
  if (variant == "JoinTwoEdges") {
    return JoinTwoEdges{std::make_shared<const Certificate>(parse_certificate(field(p, "other", w))),
                        pair_of(field(p, "edge", w), w)};
  }
  if (variant == "Double1Ext") {
    return Double1Ext{pair_of(field(p, "edge", w), w), s("vertex"), s("image"), s("other")};
  }
  if (variant == "VertexToTight") {
    return VertexToTight{s("split"),
                         std::make_shared<const Certificate>(parse_certificate(field(p, "block", w))),
                         string_map(field(p, "attach", w), w)};
  }
  throw InputError("step: unknown variant '" + variant + "'");
}

}  // namespace

Json certificate_json(const Certificate& c) {
  Json j;
  j["group"] = group_name_str(c.group);
  j["base"] = c.base;
  j["labels"] = c.labels;
  Json steps = Json::array();
  for (const auto& s : c.steps) steps.push_back(step_json(s));
  j["steps"] = steps;
  return j;
}

Certificate parse_certificate(const Json& j) {
  Certificate c;
  std::string gname = str(field(j, "group", "certificate"), "group");
  auto name = parse_group_name(gname);
  if (!name) throw InputError("certificate: unknown group '" + gname + "'");
  c.group = *name;
  c.base = str(field(j, "base", "certificate"), "base");
  if (j.contains("labels")) c.labels = string_map(j.at("labels"), "labels");
  const Json& steps = field(j, "steps", "certificate");
  if (!steps.is_array()) throw InputError("certificate: steps must be an array");
  for (const auto& s : steps) c.steps.push_back(parse_step(s));
  return c;
}

Json coloring_json(const SymmetricGraph& g, const TwoTreeColoring& c) {
  std::vector<std::pair<IdPair, bool>> rows;
  for (int e = 0; e < g.m(); ++e) {
    auto [a, b] = g.edge_ids(e);
    if (id_less(b, a)) std::swap(a, b);
    rows.push_back({{a, b}, c.red[e] != 0});
  }
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    if (x.first.first != y.first.first) return id_less(x.first.first, y.first.first);
    return id_less(x.first.second, y.first.second);
  });
  Json j = Json::object();
  for (const auto& [p, red] : rows) j[p.first + "-" + p.second] = red ? "red" : "blue";
  return j;
}

TwoTreeColoring parse_coloring(const SymmetricGraph& g, const Json& j) {
  if (!j.is_object()) throw InputError("coloring: expected an object");
  TwoTreeColoring c;
  c.red.assign(g.m(), 2);
  for (int e = 0; e < g.m(); ++e) {
    auto [a, b] = g.edge_ids(e);
    for (const auto& k : {a + "-" + b, b + "-" + a}) {
      if (!j.contains(k)) continue;
      std::string col = str(j.at(k), "coloring");
      if (col != "red" && col != "blue") throw InputError("coloring: bad color '" + col + "'");
      c.red[e] = col == "red";
    }
    if (c.red[e] == 2) throw InputError("coloring: no color for edge " + a + "-" + b);
  }
  if (static_cast<int>(j.size()) != g.m()) throw InputError("coloring: entries for non-edges");
  return c;
}

}  // namespace cylrig
