#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cylrig/error.hpp"
#include "cylrig/graph.hpp"
#include "cylrig/sparsity.hpp"

namespace cylrig {

// Operations for the order-two groups Ci, Cs and C2. Primes below denote
// images under the involution. New vertex ids are named explicitly so that
// replaying a certificate reproduces the input ids.

// New v adjacent to a, b and new v' adjacent to a', b'.
struct Sym0Ext {
  std::string vertex, image;
  std::array<std::string, 2> neighbors;
};

// Cs only: new fixed v adjacent to a and a'.
struct FixedVertex0Ext {
  std::string vertex;
  std::array<std::string, 2> neighbors;
};

// Deletes xy and x'y'; v joins x, y, z and v' joins x', y', z'.
struct Sym1Ext {
  std::string vertex, image;
  IdPair edge;
  std::string third;
};

// Replaces w by a K4 on {w, a, b, c}; each old neighbor y of w is joined to
// attach[y]. The same happens at w' with the images. An edge ww' becomes
// d d' with d = attach[w']. When w is fixed (C2) no images are given and the
// K4 carries the action w<->a, b<->c. A fixed w with images (C2) instead
// gets two K4s {w, a, b, c} and {w, a', b', c'} swapped by the action.
struct VertexToK4 {
  std::string split;
  std::array<std::string, 3> added;
  std::optional<std::array<std::string, 3>> images;
  std::map<std::string, std::string> attach;
};

// Splits w into w and u: u joins both doubled neighbors and takes over the
// moved ones. Moving w' turns ww' into uu'. A fixed w (Cs) gives a fixed u
// when no image is named; with an image (C2 or Cs) the fixed w gets a new
// pair u, u' instead.
struct VertexToC4 {
  std::string split, added;
  std::optional<std::string> image;
  IdPair doubled;
  std::vector<std::string> moved;
};

struct Certificate;

// Ci only: disjoint union with the graph of `other`, plus xy and x'y'.
struct JoinTwoEdges {
  std::shared_ptr<const Certificate> other;
  IdPair edge;  // x in the current graph, y in the other one
};

// C2 only: deletes the fixed edge xx'; w joins x, y, w' and w' joins x', y', w.
struct Double1Ext {
  IdPair edge;
  std::string vertex, image, other;
};

// Cs only: replaces fixed w by the graph of `block`; each neighbor y of w is
// joined to attach[y].
struct VertexToTight {
  std::string split;
  std::shared_ptr<const Certificate> block;
  std::map<std::string, std::string> attach;
};

using ConstructionStep = std::variant<Sym0Ext, FixedVertex0Ext, Sym1Ext, VertexToK4,
                                      VertexToC4, JoinTwoEdges, Double1Ext, VertexToTight>;

std::string step_name(const ConstructionStep& s);

struct Certificate {
  GroupName group = GroupName::Ci;
  std::string base;                            // catalog key
  std::map<std::string, std::string> labels;   // catalog vertex -> graph id
  std::vector<ConstructionStep> steps;
};

class NotTight : public InputError {
 public:
  NotTight(const std::string& what, GammaTightReport report)
      : InputError(what), report_(std::move(report)) {}
  const GammaTightReport& report() const { return report_; }

 private:
  GammaTightReport report_;
};

class InternalExhaustion : public InternalError {
 public:
  InternalExhaustion(const std::string& what, SymmetricGraph g)
      : InternalError(what), graph_(std::move(g)) {}
  const SymmetricGraph& graph() const { return graph_; }

 private:
  SymmetricGraph graph_;
};

// Throws InputError for invalid parameters or a non-simple result, and
// InternalError if a gamma-tight input loses gamma-tightness.
SymmetricGraph apply_step(const SymmetricGraph& g, const ConstructionStep& step);

// Same, with the graph of a nested certificate supplied directly.
SymmetricGraph apply_step_with(const SymmetricGraph& g, const ConstructionStep& step,
                               const SymmetricGraph* nested, bool check_tight = true);

struct Reduction {
  bool is_base = false;
  // base recognition
  std::string base;
  std::map<std::string, std::string> labels;
  // otherwise
  std::optional<SymmetricGraph> reduced;
  std::optional<ConstructionStep> step;      // nested certificate left empty
  std::optional<SymmetricGraph> nested;      // graph the nested certificate must build
};

Reduction reduce_once(const SymmetricGraph& g);

Certificate certify(const SymmetricGraph& g);

SymmetricGraph base_graph(const Certificate& cert);
SymmetricGraph replay(const Certificate& cert);
bool verify_certificate(const SymmetricGraph& g, const Certificate& cert);

// Number of vertices created by the certificate's own steps and nested ones.
int certificate_size(const Certificate& cert);

}  // namespace cylrig
