#include "cylrig/cli.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "cylrig/catalog.hpp"
#include "cylrig/characters.hpp"
#include "cylrig/construction.hpp"
#include "cylrig/error.hpp"
#include "cylrig/geometry.hpp"
#include "cylrig/io.hpp"
#include "cylrig/sparsity.hpp"
#include "cylrig/trees.hpp"

namespace cylrig {

namespace {

struct Options {
  std::string input;
  std::uint64_t seed = 0;
  int retries = 3;
  std::string format = "json";
  bool timing = false;
};

Json id_list(const SymmetricGraph& g, const std::vector<int>& vs) {
  std::vector<std::string> ids;
  for (int v : vs) ids.push_back(g.id(v));
  std::sort(ids.begin(), ids.end(), id_less);
  return ids;
}

Json header(const std::string& command, const Options& o) {
  Json r;
  r["command"] = command;
  if (!o.input.empty()) r["input"] = o.input;
  r["seed"] = o.seed;
  return r;
}

Json graph_summary(const SymmetricGraph& g) {
  return {{"group", group_name_str(g.group().name)}, {"vertices", g.n()}, {"edges", g.m()}};
}

void require_constructible(const SymmetricGraph& g) {
  if (!g.group().constructible()) throw InputError("necessary conditions only; see characters");
}

Json characters_json(const SymmetricGraph& g) {
  CharacterRows rows = character_rows(g);
  NecessaryVerdict nv = necessary_conditions(g);
  Json table = Json::object();
  for (size_t k = 0; k < rows.labels.size(); ++k) {
    table[rows.labels[k]] = {{"edge", rows.edge[k]},
                             {"external", rows.external[k]},
                             {"trivial", rows.trivial[k]},
                             {"residual", nv.residuals[k]}};
  }
  return {{"pass", nv.pass},
          {"necessary_only", nv.necessary_only},
          {"count_ok", nv.count_ok},
          {"fixed_counts_ok", nv.fixed_counts_ok},
          {"table", table},
          {"failures", nv.failures}};
}

Json tightness_json(const SymmetricGraph& g) {
  Json r;
  SparsityReport sp = check_22(g);
  r["sparse"] = sp.sparse;
  r["tight"] = sp.tight;
  try {
    GammaTightReport t = gamma_tight(g);
    r["gamma_tight"] = t.gamma_tight;
    r["necessary_only"] = t.necessary_only;
    Json counts = Json::object();
    for (size_t k = 0; k < t.counts.size(); ++k) {
      counts[g.group().labels[k + 1]] = {{"fixed_vertices", t.counts[k].fixed_vertices},
                                         {"fixed_edges", t.counts[k].fixed_edges}};
    }
    r["fixed_counts"] = counts;
    r["reasons"] = t.reasons;
    sp = t.sparsity;
  } catch (const InputError& e) {
    r["gamma_tight"] = nullptr;
    r["reasons"] = Json::array({e.what()});
  }
  r["witness"] = sp.witness ? id_list(g, *sp.witness) : Json(nullptr);
  return r;
}

Json cmd_check(const Options& o) {
  SymmetricGraph g = load_document(o.input);
  Json r = header("check", o);
  r["graph"] = graph_summary(g);
  Json t = tightness_json(g);
  for (auto& [k, v] : t.items()) r[k] = v;
  r["characters"] = characters_json(g);
  return r;
}

Json cmd_isostatic(const Options& o) {
  SymmetricGraph g = load_document(o.input);
  IsostaticVerdict v = graph_is_gamma_isostatic(g, o.seed, o.retries);
  Json r = header("isostatic", o);
  r["graph"] = graph_summary(g);
  r["isostatic"] = v.isostatic;
  r["rigid"] = v.rigid;
  r["independent"] = v.independent;
  r["probabilistic"] = v.probabilistic;
  r["max_rank"] = v.max_rank;
  r["expected_rank"] = v.expected_rank;
  r["rows"] = v.rows;
  r["attempts"] = v.attempts;
  r["winning_seed"] = v.winning_seed;
  return r;
}

Json cmd_certify(const Options& o) {
  SymmetricGraph g = load_document(o.input);
  require_constructible(g);
  Json r = header("certify", o);
  r["graph"] = graph_summary(g);
  try {
    Certificate c = certify(g);
    r["certified"] = true;
    r["verified"] = verify_certificate(g, c);
    r["steps"] = c.steps.size();
    r["certificate"] = certificate_json(c);
  } catch (const NotTight& e) {
    r["certified"] = false;
    r["reasons"] = e.report().reasons;
    const auto& w = e.report().sparsity.witness;
    r["witness"] = w ? id_list(g, *w) : Json(nullptr);
  }
  return r;
}

Json cmd_replay(const Options& o) {
  std::ifstream in(o.input);
  if (!in) throw InputError("cannot open '" + o.input + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  Json j;
  try {
    j = Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  Certificate c = parse_certificate(j.contains("certificate") ? j.at("certificate") : j);
  if (!GroupSpec::make(c.group).constructible()) {
    throw InputError("necessary conditions only; see characters");
  }
  SymmetricGraph g = replay(c);
  Json r = header("replay", o);
  r["graph"] = graph_summary(g);
  r["gamma_tight"] = gamma_tight(g).gamma_tight;
  r["document"] = document_json(g);
  return r;
}

Json cmd_trees(const Options& o) {
  SymmetricGraph g = load_document(o.input);
  require_constructible(g);
  Json r = header("trees", o);
  r["graph"] = graph_summary(g);
  Certificate c;
  try {
    c = certify(g);
  } catch (const NotTight& e) {
    r["decomposed"] = false;
    r["reasons"] = e.report().reasons;
    return r;
  }
  DecomposeLog log;
  TwoTreeColoring col = decompose(g, c, &log);
  r["decomposed"] = true;
  r["verified"] = verify_decomposition(g, col);
  r["fallbacks"] = log.fallbacks;
  r["log"] = log.messages;
  r["coloring"] = coloring_json(g, col);
  return r;
}

Json cmd_characters(const Options& o) {
  SymmetricGraph g = load_document(o.input);
  Json r = header("characters", o);
  r["graph"] = graph_summary(g);
  r["characters"] = characters_json(g);
  return r;
}

Json cmd_basegraphs(const Options& o) {
  Json r = header("basegraphs", o);
  Json entries = Json::array();
  bool all_ok = true;
  for (const CatalogEntry& e : catalog()) {
    std::vector<GroupName> groups;
    if (e.family == "Cs") {
      groups = {GroupName::Cs_axial, GroupName::Cs_horizontal};
    } else {
      groups = {e.graph.group().name};
    }
    for (GroupName gn : groups) {
      SymmetricGraph g = instantiate(e, gn);
      bool tight = gamma_tight(g).gamma_tight;
      IsostaticVerdict v = graph_is_gamma_isostatic(g, o.seed, o.retries);
      bool trees = verify_decomposition(g, e.coloring);
      all_ok = all_ok && tight && v.isostatic && trees;
      entries.push_back({{"key", e.key},
                         {"name", e.name},
                         {"group", group_name_str(gn)},
                         {"vertices", g.n()},
                         {"edges", g.m()},
                         {"gamma_tight", tight},
                         {"isostatic", v.isostatic},
                         {"rank", v.max_rank},
                         {"expected_rank", v.expected_rank},
                         {"trees_verified", trees},
                         {"document", document_json(g)},
                         {"coloring", coloring_json(g, e.coloring)}});
    }
  }
  r["all_verified"] = all_ok;
  r["entries"] = entries;
  return r;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void write_text(const Json& j, const std::string& prefix, std::ostream& out) {
  for (const auto& [k, v] : j.items()) {
    std::string key = prefix.empty() ? k : prefix + "." + k;
    if (k == "document" || k == "certificate" || k == "coloring") {
      out << key << ": " << v.dump() << "\n";
    } else if (v.is_object()) {
      write_text(v, key, out);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      for (size_t i = 0; i < v.size(); ++i) write_text(v[i], key + "[" + std::to_string(i) + "]", out);
    } else if (v.is_array()) {
      std::string line;
      for (const auto& x : v) line += (line.empty() ? "" : " ") + scalar_text(x);
      out << key << ": " << line << "\n";
    } else {
      out << key << ": " << scalar_text(v) << "\n";
    }
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric bar-joint rigidity on the cylinder"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("--input", o.input, "graph document (certificate for replay)");
    if (needs_input) in->required();
    sub->add_option("--seed", o.seed, "realization seed")->capture_default_str();
    sub->add_option("--retries", o.retries, "realizations to try")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "json or text")
        ->capture_default_str()
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--timing", o.timing, "add elapsed time to the report");
  };
  using Handler = Json (*)(const Options&);
  const std::vector<std::tuple<std::string, std::string, Handler>> commands{
      {"check", "sparsity, gamma-tightness and characters", cmd_check},
      {"isostatic", "geometric test at seeded realizations", cmd_isostatic},
      {"certify", "construction certificate", cmd_certify},
      {"replay", "rebuild the graph of a certificate", cmd_replay},
      {"trees", "two spanning tree decomposition", cmd_trees},
      {"characters", "character table and necessary conditions", cmd_characters},
      {"basegraphs", "catalog dump with self-verification", cmd_basegraphs},
  };
  std::vector<std::pair<CLI::App*, Handler>> subs;
  for (const auto& [name, help, h] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, name != "basegraphs");
    subs.push_back({sub, h});
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_out, o_err;
    int code = app.exit(e, o_out, o_err);
    out << o_out.str();
    err << o_err.str();
    return code == 0 ? 0 : 1;
  }
  try {
    for (const auto& [sub, h] : subs) {
      if (!sub->parsed()) continue;
      auto t0 = std::chrono::steady_clock::now();
      Json report = h(o);
      if (o.timing) {
        report["elapsed_ms"] = std::chrono::duration<double, std::milli>(
                                   std::chrono::steady_clock::now() - t0)
                                   .count();
      }
      if (o.format == "json") {
        out << report.dump(2) << "\n";
      } else {
        write_text(report, "", out);
      }
    }
    return 0;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cylrig
