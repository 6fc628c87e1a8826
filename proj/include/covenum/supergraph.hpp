#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "covenum/vertex_set.hpp"

namespace covenum {

// Wall-clock delay profile of one enumeration run. Gaps are measured in
// seconds between consecutive emissions (the first gap is measured from the
// start of the run, so preprocessing counts toward it).
struct DelayStats {
  std::uint64_t outputs = 0;
  double max_gap = 0.0;
  double mean_gap = 0.0;
  std::uint64_t neighborhood_calls = 0;
};

struct EnumerateOptions {
  // Stop after this many solutions; 0 means no limit.
  std::uint64_t max_solutions = 0;
  // Re-check every neighborhood result for minimality against `property`.
  // Costs one property call per member per result set.
  bool check_integrity = false;
  // Required when check_integrity is set.
  std::function<bool(const VertexSet&)> property;
};

// Greedy minimization: drops vertices in ascending id order while the
// property keeps holding. One ascending pass suffices for monotone
// properties. The property must hold for the initial set.
VertexSet minimize_monotone(VertexSet x,
                            const std::function<bool(const VertexSet&)>& property);

using SolutionSink = std::function<void(const VertexSet&)>;
using NeighborhoodFn = std::function<std::vector<VertexSet>(const VertexSet&)>;

// Breadth-first traversal of the implicit solution supergraph: emits each
// set when dequeued, then expands it once. Deduplication happens at enqueue
// time, so every solution is emitted exactly once and output order is FIFO
// from the initial solution.
DelayStats enumerate_solutions(const VertexSet& initial,
                               const NeighborhoodFn& neighbors,
                               const SolutionSink& sink,
                               const EnumerateOptions& opts = {});

}  // namespace covenum
