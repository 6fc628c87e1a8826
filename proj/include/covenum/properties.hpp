#pragma once

#include "covenum/graph.hpp"
#include "covenum/vertex_set.hpp"

namespace covenum {

enum class BasicProperty {
  vertex_cover,
  dominating_set,
  connected_vertex_cover,
  connected_dominating_set,
};

// Connected variants require G[x] to have at most one component; the empty
// induced subgraph counts as connected, so the edgeless graph has the empty
// set as its unique minimal connected vertex cover.
bool check_basic_property(const Graph& g, const VertexSet& x, BasicProperty p);

}  // namespace covenum
