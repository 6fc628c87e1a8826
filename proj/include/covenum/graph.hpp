#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "covenum/vertex_set.hpp"

namespace covenum {

// Undirected simple graph on vertices 0..n-1. Adjacency lists are kept
// sorted ascending.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  // Rejects self loops, duplicate edges and out-of-range endpoints.
  void add_edge(int u, int v);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const int> neighbors(int v) const;
  int degree(int v) const;
  int max_degree() const;
  bool has_edge(int u, int v) const;
  // Endpoint pairs normalized to (min,max), in insertion order.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
};

// Text format: first line "n m", then m lines "u v" with 0-based endpoints.
Graph parse_graph(std::istream& in);
Graph parse_graph_text(const std::string& text);
void write_graph(std::ostream& out, const Graph& g);

// Connected components of the induced subgraph G[x], each component sorted,
// components ordered by smallest member.
std::vector<VertexSet> induced_components(const Graph& g, const VertexSet& x);

// True when G[x] has at most one component. The empty set counts as
// connected.
bool induced_connected(const Graph& g, const VertexSet& x);

// Whole-graph connectivity; the empty and one-vertex graphs count as
// connected.
bool is_connected(const Graph& g);

bool is_bipartite(const Graph& g);

// Smallest-last elimination order (repeatedly remove a minimum-degree
// vertex, lowest id first). Returns the order and the degeneracy, i.e. the
// largest degree seen at removal time.
std::pair<std::vector<int>, int> degeneracy_ordering(const Graph& g);

}  // namespace covenum
