#include "covenum/supergraph.hpp"

#include <chrono>
#include <deque>
#include <unordered_set>

#include "covenum/errors.hpp"

namespace covenum {

VertexSet minimize_monotone(
    VertexSet x, const std::function<bool(const VertexSet&)>& property) {
  if (!property(x))
    throw contract_error("minimize_monotone: property must hold initially");
  const std::vector<int> members = x.ids();
  for (int v : members) {
    VertexSet candidate = x.without(v);
    if (property(candidate)) x = std::move(candidate);
  }
  return x;
}

DelayStats enumerate_solutions(const VertexSet& initial,
                               const NeighborhoodFn& neighbors,
                               const SolutionSink& sink,
                               const EnumerateOptions& opts) {
  if (opts.check_integrity && !opts.property)
    throw contract_error("enumerate_solutions: integrity check needs the property");

  using clock = std::chrono::steady_clock;
  DelayStats stats;
  const auto start = clock::now();
  auto last = start;
  double gap_sum = 0.0;

  std::deque<VertexSet> queue;
  std::unordered_set<VertexSet, VertexSetHash> seen;
  seen.insert(initial);
  queue.push_back(initial);

  while (!queue.empty()) {
    VertexSet x = std::move(queue.front());
    queue.pop_front();

    sink(x);
    const auto now = clock::now();
    const double gap = std::chrono::duration<double>(now - last).count();
    last = now;
    gap_sum += gap;
    if (gap > stats.max_gap) stats.max_gap = gap;
    ++stats.outputs;
    if (opts.max_solutions && stats.outputs >= opts.max_solutions) break;

    std::vector<VertexSet> nb = neighbors(x);
    ++stats.neighborhood_calls;
    for (VertexSet& z : nb) {
      if (opts.check_integrity) {
        if (!opts.property(z))
          throw contract_error("enumerate_solutions: neighbor lacks the property");
        for (int v : z)
          if (opts.property(z.without(v)))
            throw contract_error("enumerate_solutions: neighbor is not minimal");
      }
      if (seen.insert(z).second) queue.push_back(std::move(z));
    }
  }

  stats.mean_gap = stats.outputs ? gap_sum / static_cast<double>(stats.outputs) : 0.0;
  return stats;
}

}  // namespace covenum
