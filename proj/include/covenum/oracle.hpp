#pragma once

#include <functional>
#include <vector>

#include "covenum/hypergraph.hpp"
#include "covenum/min_valid_aug.hpp"
#include "covenum/vertex_set.hpp"

namespace covenum {
namespace oracle {

// All inclusion-minimal subsets of {0..universe-1} satisfying the given
// property, found by a size-ascending scan that skips supersets of sets
// already found. Works for arbitrary properties, not just monotone ones:
// anything containing a smaller satisfying set is not minimal. Universe is
// capped at 25 vertices.
std::vector<VertexSet> brute_minimal(
    int universe, const std::function<bool(const VertexSet&)>& property);

// All minimal transversals (hitting sets) of the hypergraph. Capped at 25
// vertices.
std::vector<VertexSet> brute_transversals(const Hypergraph& h);

// All minimal valid augmentations of a contracted bipartite instance by
// direct subset scan over the right side. Capped at 20 right vertices.
std::vector<VertexSet> brute_min_valid_aug(const ContractedBipartite& h);

}  // namespace oracle
}  // namespace covenum
