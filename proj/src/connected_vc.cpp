#include "covenum/connected_vc.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "covenum/errors.hpp"
#include "covenum/properties.hpp"

namespace covenum {

int AugmentationBudget::limit_for(const Graph& g) const {
  switch (mode) {
    case Mode::degree:
      return std::max(g.max_degree() - 1, 0);
    case Mode::claw_free:
      return std::max(value - 2, 0);
    case Mode::explicit_budget:
      return std::max(value, 0);
  }
  throw contract_error("AugmentationBudget: unknown mode");
}

int AugmentationBudget::component_bound(const Graph& g) const {
  switch (mode) {
    case Mode::degree:
      return std::max(g.max_degree(), 1);
    case Mode::claw_free:
      return std::max(value - 1, 1);
    case Mode::explicit_budget:
      return 0;
  }
  throw contract_error("AugmentationBudget: unknown mode");
}

bool is_claw_free(const Graph& g, int d) {
  if (d <= 1) return false;
  // look for d pairwise non-adjacent neighbors of any center
  std::vector<int> chosen;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto nbrs = g.neighbors(v);
    chosen.clear();
    auto extend = [&](auto&& self, size_t from) -> bool {
      if (static_cast<int>(chosen.size()) == d) return true;
      for (size_t i = from; i < nbrs.size(); ++i) {
        int u = nbrs[i];
        bool independent = true;
        for (int w : chosen)
          if (g.has_edge(u, w)) {
            independent = false;
            break;
          }
        if (!independent) continue;
        chosen.push_back(u);
        if (self(self, i + 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (extend(extend, 0)) return false;
  }
  return true;
}

std::vector<VertexSet> valid_augmentations(const Graph& g,
                                           const VertexSet& xprime, int k) {
  if (k < 0) k = 0;
  const int n = g.vertex_count();

  // Each added vertex must touch two or more components of the current set,
  // so chains stop after at most comps-1 additions regardless of k.
  auto components_of = [&](const VertexSet& s) {
    return induced_components(g, s);
  };

  std::vector<VertexSet> result;
  std::unordered_set<VertexSet, VertexSetHash> seen_w;
  std::deque<VertexSet> queue;  // pending augmentations W

  auto comps0 = components_of(xprime);
  if (comps0.size() <= 1) {
    result.push_back(VertexSet{});
    return result;
  }

  seen_w.insert(VertexSet{});
  queue.push_back(VertexSet{});

  std::vector<int> comp_of(static_cast<size_t>(n));
  while (!queue.empty()) {
    VertexSet w = std::move(queue.front());
    queue.pop_front();
    if (w.size() >= k) continue;

    VertexSet current = xprime.unite(w);
    auto comps = components_of(current);
    if (comps.size() <= 1) continue;  // already recorded as a result

    std::fill(comp_of.begin(), comp_of.end(), -1);
    for (size_t ci = 0; ci < comps.size(); ++ci)
      for (int v : comps[ci]) comp_of[static_cast<size_t>(v)] = static_cast<int>(ci);

    for (int u = 0; u < n; ++u) {
      if (current.contains(u)) continue;
      int first = -1;
      bool merges = false;
      for (int nb : g.neighbors(u)) {
        int c = comp_of[static_cast<size_t>(nb)];
        if (c < 0) continue;
        if (first == -1) {
          first = c;
        } else if (c != first) {
          merges = true;
          break;
        }
      }
      if (!merges) continue;
      VertexSet w2 = w.with(u);
      if (!seen_w.insert(w2).second) continue;
      if (induced_connected(g, xprime.unite(w2)))
        result.push_back(w2);
      queue.push_back(std::move(w2));
    }
  }

  sort_family(result);
  return result;
}

std::vector<VertexSet> cvc_neighborhood(const Graph& g, const VertexSet& x,
                                        const AugmentationBudget& budget) {
  const int k = budget.limit_for(g);
  const int comp_bound = budget.component_bound(g);
  auto property = [&](const VertexSet& s) {
    return check_basic_property(g, s, BasicProperty::connected_vertex_cover);
  };

  std::unordered_set<VertexSet, VertexSetHash> seen;
  std::vector<VertexSet> result;
  for (int v : x) {
    VertexSet xprime = x.without(v);
    for (int w : g.neighbors(v)) xprime.insert(w);
    if (comp_bound > 0) {
      const auto comps = induced_components(g, xprime);
      if (static_cast<int>(comps.size()) > comp_bound)
        throw contract_error(
            "cvc_neighborhood: removal step exceeded the component bound "
            "for this mode");
    }
    for (const VertexSet& w : valid_augmentations(g, xprime, k)) {
      VertexSet z = minimize_monotone(xprime.unite(w), property);
      if (seen.insert(z).second) result.push_back(std::move(z));
    }
  }
  sort_family(result);
  return result;
}

DelayStats enumerate_cvc(const Graph& g, const AugmentationBudget& budget,
                         const SolutionSink& sink,
                         const EnumerateOptions& opts) {
  if (!is_connected(g))
    throw input_error("enumerate_cvc: input graph must be connected");
  if (budget.mode == AugmentationBudget::Mode::claw_free &&
      opts.check_integrity && !is_claw_free(g, budget.value))
    throw input_error("enumerate_cvc: graph contains a claw larger than the mode allows");

  auto property = [&](const VertexSet& s) {
    return check_basic_property(g, s, BasicProperty::connected_vertex_cover);
  };
  VertexSet initial =
      minimize_monotone(VertexSet::range(g.vertex_count()), property);

  EnumerateOptions run = opts;
  if (run.check_integrity && !run.property) run.property = property;

  return enumerate_solutions(
      initial,
      [&](const VertexSet& x) { return cvc_neighborhood(g, x, budget); },
      sink, run);
}

}  // namespace covenum
