#include "covenum/capacitated.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>

#include "covenum/connected_vc.hpp"
#include "covenum/errors.hpp"

namespace covenum {

namespace {

// Matching workspace reused across calls (one per thread): feasibility is
// probed millions of times during an enumeration, so candidate lists and
// occupant slots live in flat arrays that keep their allocations.
struct MatchScratch {
  std::vector<int> eff;        // effective capacity per vertex, 0 outside x
  std::vector<char> in_x;
  std::vector<int> cand;       // flat per-client candidate lists
  std::vector<int> cand_off;   // client -> [cand_off[i], cand_off[i+1])
  std::vector<int> outside;    // dominating sets: client -> outside vertex
  std::vector<int> client_to;  // client -> matched vertex
  std::vector<int> occ;        // flat occupant slots, eff[v] of them per vertex
  std::vector<int> occ_off;
  std::vector<int> occ_cnt;
  std::vector<std::uint64_t> visit;  // per-vertex stamps, monotone across calls
  std::uint64_t stamp = 0;

  // Augmenting-path step: place u on a vertex with a free slot, or reroute
  // one of the current occupants of a saturated vertex.
  bool augment(int u) {
    for (int i = cand_off[static_cast<size_t>(u)];
         i < cand_off[static_cast<size_t>(u) + 1]; ++i) {
      const int v = cand[static_cast<size_t>(i)];
      if (visit[static_cast<size_t>(v)] == stamp) continue;
      visit[static_cast<size_t>(v)] = stamp;
      const int base = occ_off[static_cast<size_t>(v)];
      const int room = occ_off[static_cast<size_t>(v) + 1] - base;
      int& cnt = occ_cnt[static_cast<size_t>(v)];
      if (cnt < room) {
        occ[static_cast<size_t>(base + cnt++)] = u;
        client_to[static_cast<size_t>(u)] = v;
        return true;
      }
      for (int j = 0; j < cnt; ++j) {
        const int u2 = occ[static_cast<size_t>(base + j)];
        if (augment(u2)) {
          occ[static_cast<size_t>(base + j)] = u;
          client_to[static_cast<size_t>(u)] = v;
          return true;
        }
      }
    }
    return false;
  }
};

// Core feasibility test; fills *out with a witness when requested. Pure from
// the caller's point of view, the thread_local scratch only recycles buffers.
bool cap_match(const Graph& g, const CapacityFn& c, const VertexSet& x,
               CapKind kind, Assignment* out) {
  const int n = g.vertex_count();
  if (static_cast<int>(c.cap.size()) != n)
    throw input_error("capacities: size does not match the vertex count");

  thread_local MatchScratch s;
  s.in_x.assign(static_cast<size_t>(n), 0);
  for (int v : x) s.in_x[static_cast<size_t>(v)] = 1;
  s.eff.assign(static_cast<size_t>(n), 0);
  for (int v : x) {
    const int raw = c.cap[static_cast<size_t>(v)];
    if (raw < 0) throw input_error("capacities: negative capacity");
    s.eff[static_cast<size_t>(v)] =
        kind == CapKind::vertex_cover ? std::min(raw, g.degree(v))
                                      : std::min(raw, n - 1);
  }

  // candidate lists; a client with no candidate is an immediate reject
  s.cand.clear();
  s.cand_off.clear();
  s.cand_off.push_back(0);
  s.outside.clear();
  int clients = 0;
  if (kind == CapKind::vertex_cover) {
    for (const auto& [u, w] : g.edges()) {
      const bool iu = s.in_x[static_cast<size_t>(u)] != 0;
      const bool iw = s.in_x[static_cast<size_t>(w)] != 0;
      if (!iu && !iw) return false;
      if (iu) s.cand.push_back(u);
      if (iw) s.cand.push_back(w);
      s.cand_off.push_back(static_cast<int>(s.cand.size()));
      ++clients;
    }
  } else {
    for (int v = 0; v < n; ++v) {
      if (s.in_x[static_cast<size_t>(v)]) continue;
      const size_t before = s.cand.size();
      for (int w : g.neighbors(v))
        if (s.in_x[static_cast<size_t>(w)]) s.cand.push_back(w);
      if (s.cand.size() == before) return false;
      s.cand_off.push_back(static_cast<int>(s.cand.size()));
      s.outside.push_back(v);
      ++clients;
    }
  }

  // quick reject: total usable capacity must reach the client count
  long long total = 0;
  for (int v : x) {
    total += std::min(s.eff[static_cast<size_t>(v)], clients);
    if (total >= clients) break;
  }
  if (total < clients) return false;

  s.occ_off.assign(static_cast<size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v)
    s.occ_off[static_cast<size_t>(v) + 1] =
        s.occ_off[static_cast<size_t>(v)] +
        std::min(s.eff[static_cast<size_t>(v)], clients);
  s.occ.resize(static_cast<size_t>(s.occ_off[static_cast<size_t>(n)]));
  s.occ_cnt.assign(static_cast<size_t>(n), 0);
  s.client_to.assign(static_cast<size_t>(clients), -1);
  if (s.visit.size() < static_cast<size_t>(n))
    s.visit.resize(static_cast<size_t>(n), 0);

  for (int u = 0; u < clients; ++u) {
    ++s.stamp;
    if (!s.augment(u)) return false;
  }

  if (out) {
    if (kind == CapKind::vertex_cover) {
      out->alpha.assign(s.client_to.begin(), s.client_to.end());
      out->beta.clear();
    } else {
      out->alpha.clear();
      out->beta.clear();
      out->beta.reserve(static_cast<size_t>(clients));
      for (int i = 0; i < clients; ++i)
        out->beta.emplace_back(s.outside[static_cast<size_t>(i)],
                               s.client_to[static_cast<size_t>(i)]);
    }
  }
  return true;
}

// Memo for feasibility probes within one enumeration run. Bounded so that
// arbitrarily long runs cannot grow it without limit.
using FeasCache = std::unordered_map<VertexSet, bool, VertexSetHash>;
constexpr size_t kFeasCacheLimit = size_t(1) << 20;

bool cached_feasible(const Graph& g, const CapacityFn& c, CapKind kind,
                     FeasCache& cache, const VertexSet& s) {
  if (cache.size() > kFeasCacheLimit) cache.clear();
  auto [it, fresh] = cache.try_emplace(s, false);
  if (fresh) it->second = cap_match(g, c, s, kind, nullptr);
  return it->second;
}

}  // namespace

std::optional<Assignment> cap_feasible(const Graph& g, const CapacityFn& c,
                                       const VertexSet& x, CapKind kind) {
  Assignment a;
  if (!cap_match(g, c, x, kind, &a)) return std::nullopt;
  return a;
}

namespace {

// Calls fn on every subset of pool with size <= limit (the empty set
// included), in (size, lexicographic) order per size layer.
template <typename Fn>
void for_each_subset_upto(const std::vector<int>& pool, int limit, Fn&& fn) {
  std::vector<int> current;
  auto rec = [&](auto&& self, size_t from, int remaining) -> void {
    fn(current);
    if (remaining == 0) return;
    for (size_t i = from; i < pool.size(); ++i) {
      current.push_back(pool[i]);
      self(self, i + 1, remaining - 1);
      current.pop_back();
    }
  };
  // depth-first preorder: still visits every subset within the size cap
  rec(rec, 0, std::max(limit, 0));
}

std::vector<VertexSet> cap_neighborhood_impl(const Graph& g,
                                             const CapacityFn& c,
                                             const VertexSet& x, CapKind kind,
                                             FeasCache& cache) {
  const int n = g.vertex_count();
  const int q = std::min(c.max(), g.max_degree());
  const int limit = kind == CapKind::vertex_cover ? q : q + 1;
  auto feasible = [&](const VertexSet& s) {
    return cached_feasible(g, c, kind, cache, s);
  };

  std::unordered_set<VertexSet, VertexSetHash> seen;
  std::vector<VertexSet> result;
  for (int v : x) {
    VertexSet base = x.without(v);
    std::vector<int> pool;
    pool.reserve(static_cast<size_t>(n));
    for (int u = 0; u < n; ++u)
      if (!base.contains(u)) pool.push_back(u);
    for_each_subset_upto(pool, limit, [&](const std::vector<int>& w) {
      VertexSet candidate = base;
      for (int u : w) candidate.insert(u);
      if (!feasible(candidate)) return;
      VertexSet z = minimize_monotone(candidate, feasible);
      if (seen.insert(z).second) result.push_back(std::move(z));
    });
  }
  sort_family(result);
  return result;
}

}  // namespace

std::vector<VertexSet> cap_neighborhood(const Graph& g, const CapacityFn& c,
                                        const VertexSet& x, CapKind kind) {
  FeasCache cache;
  return cap_neighborhood_impl(g, c, x, kind, cache);
}

DelayStats enumerate_capacitated(const Graph& g, const CapacityFn& c,
                                 CapKind kind, const SolutionSink& sink,
                                 const EnumerateOptions& opts) {
  FeasCache cache;
  auto feasible = [&](const VertexSet& s) {
    return cached_feasible(g, c, kind, cache, s);
  };
  VertexSet everything = VertexSet::range(g.vertex_count());
  if (!feasible(everything)) return DelayStats{};  // empty family

  VertexSet initial = minimize_monotone(everything, feasible);
  EnumerateOptions run = opts;
  if (run.check_integrity && !run.property) run.property = feasible;
  return enumerate_solutions(
      initial,
      [&](const VertexSet& x) {
        return cap_neighborhood_impl(g, c, x, kind, cache);
      },
      sink, run);
}

DelayStats enumerate_connected_capacitated_vc(const Graph& g,
                                              const CapacityFn& c,
                                              const SolutionSink& sink,
                                              const EnumerateOptions& opts) {
  if (!is_connected(g))
    throw input_error(
        "enumerate_connected_capacitated_vc: input graph must be connected");
  FeasCache cache;
  auto feasible = [&](const VertexSet& s) {
    return cached_feasible(g, c, CapKind::vertex_cover, cache, s);
  };
  auto property = [&](const VertexSet& s) {
    return feasible(s) && induced_connected(g, s);
  };

  const int n = g.vertex_count();
  VertexSet everything = VertexSet::range(n);
  if (!property(everything)) return DelayStats{};  // empty family

  VertexSet initial = minimize_monotone(everything, property);
  const int max_deg = g.max_degree();
  const int limit_w = std::min(c.max(), max_deg);
  const int comp_bound = std::max(2 * max_deg, 1);

  auto neighborhood = [&](const VertexSet& x) {
    std::unordered_set<VertexSet, VertexSetHash> seen;
    std::vector<VertexSet> result;
    for (int v : x) {
      VertexSet base = x.without(v);
      std::vector<int> pool;
      for (int u = 0; u < n; ++u)
        if (!base.contains(u)) pool.push_back(u);
      for_each_subset_upto(pool, limit_w, [&](const std::vector<int>& w) {
        VertexSet repaired = base;
        for (int u : w) repaired.insert(u);
        if (!feasible(repaired)) return;
        const auto comps = induced_components(g, repaired);
        if (static_cast<int>(comps.size()) > comp_bound)
          throw contract_error(
              "enumerate_connected_capacitated_vc: repaired set exceeded "
              "the component bound");
        for (const VertexSet& w2 :
             valid_augmentations(g, repaired, 2 * max_deg - 1)) {
          VertexSet z = minimize_monotone(repaired.unite(w2), property);
          if (seen.insert(z).second) result.push_back(std::move(z));
        }
      });
    }
    sort_family(result);
    return result;
  };

  EnumerateOptions run = opts;
  if (run.check_integrity && !run.property) run.property = property;
  return enumerate_solutions(initial, neighborhood, sink, run);
}

}  // namespace covenum
