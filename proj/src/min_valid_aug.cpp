#include "covenum/min_valid_aug.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "covenum/errors.hpp"
#include "covenum/properties.hpp"

namespace covenum {

ContractedBipartite ContractedBipartite::from_bipartite(
    int nl, int nr, const std::vector<std::pair<int, int>>& edges) {
  if (nl < 0 || nr < 0)
    throw input_error("bipartite instance: negative side size");
  ContractedBipartite h;
  h.left_adj_.resize(static_cast<size_t>(nl));
  h.rights_.resize(static_cast<size_t>(nr));
  std::iota(h.rights_.begin(), h.rights_.end(), 0);
  h.right_adj_.resize(static_cast<size_t>(nr));
  h.origin_.reserve(static_cast<size_t>(nl));
  for (int i = 0; i < nl; ++i) h.origin_.push_back(VertexSet{i});
  for (const auto& [l, r] : edges) {
    if (l < 0 || l >= nl || r < 0 || r >= nr)
      throw input_error("bipartite instance: edge endpoint out of range");
    auto& la = h.left_adj_[static_cast<size_t>(l)];
    auto it = std::lower_bound(la.begin(), la.end(), r);
    if (it != la.end() && *it == r)
      throw input_error("bipartite instance: duplicate edge");
    la.insert(it, r);
    auto& ra = h.right_adj_[static_cast<size_t>(r)];
    ra.insert(std::lower_bound(ra.begin(), ra.end(), l), l);
  }
  return h;
}

ContractedBipartite ContractedBipartite::from_cover_components(
    const Graph& g, const VertexSet& xprime) {
  const int n = g.vertex_count();
  auto comps = induced_components(g, xprime);
  std::vector<int> comp_of(static_cast<size_t>(n), -1);
  for (size_t ci = 0; ci < comps.size(); ++ci)
    for (int v : comps[ci]) comp_of[static_cast<size_t>(v)] = static_cast<int>(ci);

  ContractedBipartite h;
  h.left_adj_.resize(comps.size());
  h.origin_ = std::move(comps);
  for (int v = 0; v < n; ++v) {
    if (comp_of[static_cast<size_t>(v)] != -1) continue;
    std::vector<int> blobs;
    for (int w : g.neighbors(v)) {
      int c = comp_of[static_cast<size_t>(w)];
      if (c == -1)
        throw contract_error(
            "from_cover_components: xprime is not a vertex cover");
      blobs.push_back(c);
    }
    std::sort(blobs.begin(), blobs.end());
    blobs.erase(std::unique(blobs.begin(), blobs.end()), blobs.end());
    h.rights_.push_back(v);
    h.right_adj_.push_back(std::move(blobs));
  }
  for (size_t ri = 0; ri < h.rights_.size(); ++ri)
    for (int li : h.right_adj_[ri])
      h.left_adj_[static_cast<size_t>(li)].push_back(h.rights_[ri]);
  return h;
}

int ContractedBipartite::right_index(int rid) const {
  auto it = std::lower_bound(rights_.begin(), rights_.end(), rid);
  if (it == rights_.end() || *it != rid)
    throw contract_error("bipartite instance: unknown right vertex");
  return static_cast<int>(it - rights_.begin());
}

bool ContractedBipartite::has_right(int rid) const {
  return std::binary_search(rights_.begin(), rights_.end(), rid);
}

int ContractedBipartite::right_degree(int rid) const {
  return static_cast<int>(right_adj_[static_cast<size_t>(right_index(rid))].size());
}

const std::vector<int>& ContractedBipartite::left_neighbors(int li) const {
  if (li < 0 || li >= left_count())
    throw contract_error("bipartite instance: blob index out of range");
  return left_adj_[static_cast<size_t>(li)];
}

const std::vector<int>& ContractedBipartite::right_neighbors(int rid) const {
  return right_adj_[static_cast<size_t>(right_index(rid))];
}

const VertexSet& ContractedBipartite::origin(int li) const {
  if (li < 0 || li >= left_count())
    throw contract_error("bipartite instance: blob index out of range");
  return origin_[static_cast<size_t>(li)];
}

ContractedBipartite ContractedBipartite::remove_right(int rid) const {
  const int idx = right_index(rid);
  ContractedBipartite h;
  h.left_adj_ = left_adj_;
  for (auto& la : h.left_adj_) {
    auto it = std::lower_bound(la.begin(), la.end(), rid);
    if (it != la.end() && *it == rid) la.erase(it);
  }
  h.rights_ = rights_;
  h.rights_.erase(h.rights_.begin() + idx);
  h.right_adj_ = right_adj_;
  h.right_adj_.erase(h.right_adj_.begin() + idx);
  h.origin_ = origin_;
  return h;
}

ContractedBipartite ContractedBipartite::contract_rights(
    const VertexSet& xs) const {
  std::vector<int> parent(left_adj_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  };
  for (int x : xs) {
    const auto& blobs = right_adj_[static_cast<size_t>(right_index(x))];
    if (blobs.empty())
      throw contract_error(
          "contract: isolated right vertex would form a blob without left "
          "provenance");
    for (size_t i = 1; i < blobs.size(); ++i) {
      int a = find(blobs[0]), b = find(blobs[i]);
      if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
  }

  // new blob indexes ordered by smallest old blob index in the class
  std::vector<int> new_index(left_adj_.size(), -1);
  int blobs_out = 0;
  for (size_t li = 0; li < left_adj_.size(); ++li) {
    int root = find(static_cast<int>(li));
    if (new_index[static_cast<size_t>(root)] == -1)
      new_index[static_cast<size_t>(root)] = blobs_out++;
    new_index[li] = new_index[static_cast<size_t>(root)];
  }

  ContractedBipartite h;
  h.left_adj_.resize(static_cast<size_t>(blobs_out));
  h.origin_.resize(static_cast<size_t>(blobs_out));
  for (size_t li = 0; li < left_adj_.size(); ++li) {
    int ni = new_index[li];
    h.origin_[static_cast<size_t>(ni)] =
        h.origin_[static_cast<size_t>(ni)].unite(origin_[li]);
  }
  for (size_t ri = 0; ri < rights_.size(); ++ri) {
    const int rid = rights_[ri];
    if (xs.contains(rid)) continue;
    std::vector<int> blobs;
    for (int li : right_adj_[ri]) blobs.push_back(new_index[static_cast<size_t>(li)]);
    std::sort(blobs.begin(), blobs.end());
    blobs.erase(std::unique(blobs.begin(), blobs.end()), blobs.end());
    h.rights_.push_back(rid);
    h.right_adj_.push_back(std::move(blobs));
  }
  for (size_t ri = 0; ri < h.rights_.size(); ++ri)
    for (int li : h.right_adj_[ri])
      h.left_adj_[static_cast<size_t>(li)].push_back(h.rights_[ri]);
  return h;
}

bool ContractedBipartite::valid_augmentation(const VertexSet& w) const {
  if (left_count() == 0)
    throw contract_error("valid_augmentation: instance has no blobs");
  const auto& wids = w.ids();
  std::vector<int> w_index(wids.size());
  for (size_t i = 0; i < wids.size(); ++i) w_index[i] = right_index(wids[i]);

  std::vector<char> seen_left(left_adj_.size(), 0);
  std::vector<char> seen_w(wids.size(), 0);
  // stack entries: blob index, or ~i for position i in w
  std::vector<int> stack{0};
  seen_left[0] = 1;
  int reached_left = 0, reached_w = 0;
  auto w_pos = [&](int rid) {
    auto it = std::lower_bound(wids.begin(), wids.end(), rid);
    if (it == wids.end() || *it != rid) return -1;
    return static_cast<int>(it - wids.begin());
  };
  while (!stack.empty()) {
    int e = stack.back();
    stack.pop_back();
    if (e >= 0) {
      ++reached_left;
      for (int rid : left_adj_[static_cast<size_t>(e)]) {
        int p = w_pos(rid);
        if (p >= 0 && !seen_w[static_cast<size_t>(p)]) {
          seen_w[static_cast<size_t>(p)] = 1;
          stack.push_back(~p);
        }
      }
    } else {
      int p = ~e;
      ++reached_w;
      for (int li : right_adj_[static_cast<size_t>(w_index[static_cast<size_t>(p)])]) {
        if (!seen_left[static_cast<size_t>(li)]) {
          seen_left[static_cast<size_t>(li)] = 1;
          stack.push_back(li);
        }
      }
    }
  }
  return reached_left == left_count() &&
         reached_w == static_cast<int>(wids.size());
}

bool ContractedBipartite::whole_connected() const {
  if (left_count() == 0) return rights_.size() <= 1;
  return valid_augmentation(VertexSet(rights_));
}

ContractedBipartite contract(const ContractedBipartite& h, const VertexSet& x) {
  return h.contract_rights(x);
}

std::vector<VertexSet> min_filter(const ContractedBipartite& h,
                                  const std::vector<VertexSet>& family) {
  std::vector<VertexSet> out;
  for (const VertexSet& w : family) {
    if (!h.valid_augmentation(w))
      throw contract_error("min_filter: member is not a valid augmentation");
    bool minimal = true;
    for (int x : w) {
      if (h.valid_augmentation(w.without(x))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(w);
  }
  return out;
}

namespace {

std::vector<VertexSet> mva_recurse(const ContractedBipartite& h) {
  const int nl = h.left_count();
  if (nl <= 1) return {VertexSet{}};
  const auto& rights = h.rights();
  if (rights.empty()) return {};
  if (rights.size() == 1) {
    VertexSet w{rights[0]};
    if (h.valid_augmentation(w)) return {w};
    return {};
  }

  // pivot on the highest-degree right vertex, lowest id on ties
  int v = rights[0];
  for (int r : rights)
    if (h.right_degree(r) > h.right_degree(v)) v = r;
  if (h.right_degree(v) <= 1) return {};

  const auto sv = mva_recurse(h.contract_rights(VertexSet{v}));

  std::vector<VertexSet> out;
  std::unordered_set<VertexSet, VertexSetHash> seen;
  auto add_all = [&](const std::vector<VertexSet>& family) {
    for (const VertexSet& w : family)
      if (seen.insert(w).second) out.push_back(w);
  };

  std::vector<VertexSet> with_v;
  with_v.reserve(sv.size());
  for (const VertexSet& w : sv) with_v.push_back(w.with(v));

  if (2 * h.right_degree(v) > nl) {
    // the v-free part is exactly the family of the instance without v
    add_all(mva_recurse(h.remove_right(v)));
    add_all(min_filter(h, with_v));
  } else {
    add_all(min_filter(h, with_v));
    for (const VertexSet& w : sv) {
      auto hw = h.contract_rights(w).remove_right(v);
      std::vector<VertexSet> extended;
      for (const VertexSet& w2 : mva_recurse(hw))
        extended.push_back(w2.unite(w));
      add_all(min_filter(h, extended));
    }
  }

  // guard: the union of branches must be an antichain
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = 0; j < out.size(); ++j)
      if (i != j && out[i].subset_of(out[j]))
        throw contract_error("min_valid_aug: branch union is not an antichain");

  // each augmentation of the contracted instance extends to one here
  if (sv.size() > out.size())
    throw contract_error("min_valid_aug: contracted family larger than result");

  sort_family(out);
  return out;
}

}  // namespace

std::vector<VertexSet> min_valid_aug(const ContractedBipartite& h) {
  if (!h.whole_connected())
    throw input_error("min_valid_aug: instance must be connected");
  return mva_recurse(h);
}

DelayStats enumerate_cvc_quasipoly(const Graph& g, const SolutionSink& sink,
                                   const EnumerateOptions& opts) {
  if (!is_connected(g))
    throw input_error("enumerate_cvc: input graph must be connected");
  auto property = [&](const VertexSet& s) {
    return check_basic_property(g, s, BasicProperty::connected_vertex_cover);
  };
  VertexSet initial =
      minimize_monotone(VertexSet::range(g.vertex_count()), property);

  auto neighborhood = [&](const VertexSet& x) {
    std::unordered_set<VertexSet, VertexSetHash> seen;
    std::vector<VertexSet> result;
    for (int v : x) {
      VertexSet xprime = x.without(v);
      for (int w : g.neighbors(v)) xprime.insert(w);
      auto h = ContractedBipartite::from_cover_components(g, xprime);
      for (const VertexSet& w : mva_recurse(h)) {
        VertexSet z = minimize_monotone(xprime.unite(w), property);
        if (seen.insert(z).second) result.push_back(std::move(z));
      }
    }
    sort_family(result);
    return result;
  };

  EnumerateOptions run = opts;
  if (run.check_integrity && !run.property) run.property = property;
  return enumerate_solutions(initial, neighborhood, sink, run);
}

ContractedBipartite parse_bipartite_instance(std::istream& in) {
  std::string all(std::istreambuf_iterator<char>(in), {});
  std::istringstream ts(all);
  long long nl = 0, nr = 0, m = 0;
  if (!(ts >> nl >> nr >> m) || nl < 0 || nr < 0 || m < 0)
    throw parse_error("bipartite instance: expected header 'nL nR m'");
  std::vector<std::pair<int, int>> edges;
  for (long long i = 0; i < m; ++i) {
    long long l = 0, r = 0;
    if (!(ts >> l >> r))
      throw parse_error("bipartite instance: expected edge 'l r'");
    edges.emplace_back(static_cast<int>(l), static_cast<int>(r));
  }
  std::string extra;
  if (ts >> extra)
    throw parse_error("bipartite instance: trailing tokens");
  try {
    return ContractedBipartite::from_bipartite(static_cast<int>(nl),
                                               static_cast<int>(nr), edges);
  } catch (const input_error& e) {
    throw parse_error(e.what());
  }
}

}  // namespace covenum
