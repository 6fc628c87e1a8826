#pragma once

#include <vector>

#include "covenum/graph.hpp"
#include "covenum/supergraph.hpp"
#include "covenum/vertex_set.hpp"

namespace covenum {

// One supergraph step for minimal connected dominating sets: for every v in
// x, rebuild around x∖{v} with replacement sets W* of size at most 3Δ-2 and
// greedily minimize every connected dominating result. Candidates for W*
// are restricted to the closed second neighborhood of v plus vertices with
// a neighbor in the current partial set; replacements that repair
// domination live in N[N[v]], and connectors between components always have
// a neighbor in the dominating partial set they extend.
std::vector<VertexSet> cds_neighborhood(const Graph& g, const VertexSet& x);

// Enumerates all minimal connected dominating sets of a connected graph.
DelayStats enumerate_cds(const Graph& g, const SolutionSink& sink,
                         const EnumerateOptions& opts = {});

}  // namespace covenum
