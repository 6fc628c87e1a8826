#pragma once

#include <vector>

#include "covenum/graph.hpp"
#include "covenum/supergraph.hpp"
#include "covenum/vertex_set.hpp"

namespace covenum {

// Size cap for the augmentation search in one neighborhood step.
struct AugmentationBudget {
  enum class Mode { degree, claw_free, explicit_budget };

  Mode mode = Mode::degree;
  int value = 0;  // d for claw_free, k for explicit_budget

  static AugmentationBudget degree() { return {Mode::degree, 0}; }
  static AugmentationBudget claw(int d) { return {Mode::claw_free, d}; }
  static AugmentationBudget budget(int k) { return {Mode::explicit_budget, k}; }

  // Maximum augmentation size for graph g: max-degree minus one, d-2, or
  // the explicit cap, never negative.
  int limit_for(const Graph& g) const;
  // Number of components one removal step may create; used as a sanity
  // bound on the neighborhood computation (0 = no bound).
  int component_bound(const Graph& g) const;
};

// Augmentations W of xprime with |W| <= k and G[xprime ∪ W] connected.
// Candidates are restricted to vertices that merge at least two components
// of the current augmented set: since xprime is a vertex cover its
// complement is independent, so a vertex adjacent to fewer than two
// components can never help connect them. The result therefore contains
// every minimal valid augmentation of size <= k (and some non-minimal
// merge chains), includes the empty set iff G[xprime] is already
// connected, and is sorted by (size, lexicographic).
std::vector<VertexSet> valid_augmentations(const Graph& g,
                                           const VertexSet& xprime, int k);

// One supergraph step: for every v in x, replace v by its neighborhood,
// reconnect with every augmentation within budget, and greedily minimize.
std::vector<VertexSet> cvc_neighborhood(const Graph& g, const VertexSet& x,
                                        const AugmentationBudget& budget);

// Enumerates all minimal connected vertex covers of a connected graph.
// Throws input_error when g is disconnected, or when budget is claw mode
// and an integrity-checked run finds a d-claw.
DelayStats enumerate_cvc(const Graph& g, const AugmentationBudget& budget,
                         const SolutionSink& sink,
                         const EnumerateOptions& opts = {});

// True when no vertex has d pairwise non-adjacent neighbors.
bool is_claw_free(const Graph& g, int d);

}  // namespace covenum
