#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "covenum/capacity.hpp"
#include "covenum/graph.hpp"
#include "covenum/supergraph.hpp"
#include "covenum/vertex_set.hpp"

namespace covenum {

enum class CapKind { vertex_cover, dominating_set };

// Feasibility witness. For vertex covers, alpha[e] is the member of x that
// edge e (index into g.edges()) is charged to. For dominating sets, beta
// lists (outside vertex, dominator) pairs.
struct Assignment {
  std::vector<int> alpha;
  std::vector<std::pair<int, int>> beta;
};

// Matching-based feasibility test. Capacities are clamped before matching:
// a vertex cover never charges more than deg(v) edges to v, a dominating
// set never charges more than n-1 vertices. Returns a witness when x is
// feasible for the kind (for vertex covers this implies x covers every
// edge).
std::optional<Assignment> cap_feasible(const Graph& g, const CapacityFn& c,
                                       const VertexSet& x, CapKind kind);

// One supergraph step: for every v in x, scan replacement sets W up to the
// guaranteed witness size (min(max capacity, max degree), plus one for
// dominating sets) and keep the greedy minimization of every feasible
// result.
std::vector<VertexSet> cap_neighborhood(const Graph& g, const CapacityFn& c,
                                        const VertexSet& x, CapKind kind);

// Enumerates all minimal capacitated vertex covers or dominating sets.
// When V(g) itself is infeasible the family is empty: the run emits
// nothing and reports zero outputs, which is not an error.
DelayStats enumerate_capacitated(const Graph& g, const CapacityFn& c,
                                 CapKind kind, const SolutionSink& sink,
                                 const EnumerateOptions& opts = {});

// Connected and capacitated at once: solutions are vertex covers that are
// both capacity-feasible and induce a connected subgraph. Requires a
// connected input graph.
DelayStats enumerate_connected_capacitated_vc(const Graph& g,
                                              const CapacityFn& c,
                                              const SolutionSink& sink,
                                              const EnumerateOptions& opts = {});

}  // namespace covenum
