#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "covenum/vertex_set.hpp"

namespace covenum {

// Hypergraph on vertices 0..n-1. Every hyperedge is a non-empty subset.
struct Hypergraph {
  int n = 0;
  std::vector<VertexSet> edges;
};

// Text format: first line "n m", then m lines each listing the vertices of
// one hyperedge.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph_text(const std::string& text);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

// Throws input_error when an edge is empty or has an out-of-range vertex.
void validate_hypergraph(const Hypergraph& h);

}  // namespace covenum
