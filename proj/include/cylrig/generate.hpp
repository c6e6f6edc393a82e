#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cylrig/construction.hpp"

namespace cylrig {

// Variant index of ConstructionStep.
enum class StepKind {
  Sym0Ext = 0,
  FixedVertex0Ext,
  Sym1Ext,
  VertexToK4,
  VertexToC4,
  JoinTwoEdges,
  Double1Ext,
  VertexToTight,
};

std::vector<StepKind> step_kinds_for(GroupName group);
std::string step_kind_name(StepKind k);

// Random symmetric graphs for tests and corpora. Fresh vertex ids are
// "n1", "n2", ... and never repeat within one generator.
class Generator {
 public:
  Generator(GroupName group, std::uint64_t seed);

  std::mt19937_64& rng() { return rng_; }
  GroupName group() const { return group_; }
  std::string fresh();

  // A random catalog base graph with fresh labels and no steps.
  Certificate random_base();

  // Parameters for one random application of `kind`, checked by applying
  // it. nullopt when the variant does not fit the graph.
  std::optional<ConstructionStep> random_step(const SymmetricGraph& g, StepKind kind,
                                              int attempts = 40);

  struct Built {
    SymmetricGraph graph;
    Certificate certificate;
  };

  // Grows a random base graph by random steps until it has at least
  // `min_vertices` vertices, never exceeding `max_vertices`.
  Built random_tight(int min_vertices, int max_vertices);

  // Removes one random edge orbit and adds one random non-edge orbit.
  SymmetricGraph perturb(const SymmetricGraph& g);

 private:
  int uniform(int lo, int hi);
  Built small_nested();

  GroupName group_;
  std::mt19937_64 rng_;
  long counter_ = 0;
};

}  // namespace cylrig
