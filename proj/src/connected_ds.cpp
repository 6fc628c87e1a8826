#include "covenum/connected_ds.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "covenum/errors.hpp"
#include "covenum/properties.hpp"

namespace covenum {

std::vector<VertexSet> cds_neighborhood(const Graph& g, const VertexSet& x) {
  const int n = g.vertex_count();
  const int cap = std::max(3 * g.max_degree() - 2, 0);
  auto property = [&](const VertexSet& s) {
    return check_basic_property(g, s, BasicProperty::connected_dominating_set);
  };

  std::unordered_set<VertexSet, VertexSetHash> result_seen;
  std::vector<VertexSet> result;

  std::vector<char> second_nbhd(static_cast<size_t>(n), 0);
  for (int v : x) {
    VertexSet base = x.without(v);

    std::fill(second_nbhd.begin(), second_nbhd.end(), 0);
    second_nbhd[static_cast<size_t>(v)] = 1;
    for (int w : g.neighbors(v)) {
      second_nbhd[static_cast<size_t>(w)] = 1;
      for (int u : g.neighbors(w)) second_nbhd[static_cast<size_t>(u)] = 1;
    }

    // breadth-first walk over candidate replacement sets, deduplicated by
    // the set itself so different insertion orders meet
    std::unordered_set<VertexSet, VertexSetHash> visited;
    std::deque<VertexSet> queue;
    visited.insert(base);
    queue.push_back(base);
    while (!queue.empty()) {
      VertexSet s = std::move(queue.front());
      queue.pop_front();
      if (property(s)) {
        VertexSet z = minimize_monotone(s, property);
        if (result_seen.insert(z).second) result.push_back(std::move(z));
      }
      if (s.size() - base.size() >= cap) continue;
      for (int u = 0; u < n; ++u) {
        if (s.contains(u)) continue;
        bool candidate = second_nbhd[static_cast<size_t>(u)];
        if (!candidate) {
          for (int w : g.neighbors(u)) {
            if (s.contains(w)) {
              candidate = true;
              break;
            }
          }
        }
        if (!candidate) continue;
        VertexSet s2 = s.with(u);
        if (visited.insert(s2).second) queue.push_back(std::move(s2));
      }
    }
  }
  sort_family(result);
  return result;
}

DelayStats enumerate_cds(const Graph& g, const SolutionSink& sink,
                         const EnumerateOptions& opts) {
  if (!is_connected(g))
    throw input_error("enumerate_cds: input graph must be connected");
  auto property = [&](const VertexSet& s) {
    return check_basic_property(g, s, BasicProperty::connected_dominating_set);
  };
  VertexSet initial =
      minimize_monotone(VertexSet::range(g.vertex_count()), property);

  EnumerateOptions run = opts;
  if (run.check_integrity && !run.property) run.property = property;
  return enumerate_solutions(
      initial, [&](const VertexSet& x) { return cds_neighborhood(g, x); },
      sink, run);
}

}  // namespace covenum
