#include "covenum/oracle.hpp"

#include <cstdint>

#include "covenum/errors.hpp"

namespace covenum {
namespace oracle {

namespace {

VertexSet set_from_mask(std::uint32_t mask) {
  std::vector<int> ids;
  for (int v = 0; mask; ++v, mask >>= 1)
    if (mask & 1u) ids.push_back(v);
  return VertexSet(std::move(ids));
}

// next subset of the same popcount (Gosper); returns 0 when exhausted
std::uint32_t next_same_popcount(std::uint32_t x, std::uint32_t full) {
  if (x == 0) return 0;
  std::uint32_t c = x & static_cast<std::uint32_t>(-static_cast<std::int32_t>(x));
  std::uint32_t r = x + c;
  std::uint32_t next = (((r ^ x) >> 2) / c) | r;
  return next > full ? 0 : next;
}

}  // namespace

std::vector<VertexSet> brute_minimal(
    int universe, const std::function<bool(const VertexSet&)>& property) {
  if (universe < 0 || universe > 25)
    throw contract_error("brute_minimal: universe must be within [0, 25]");
  const std::uint32_t full =
      universe == 0 ? 0u : ((1u << universe) - 1u);

  std::vector<std::uint32_t> found_masks;
  std::vector<VertexSet> out;
  auto consider = [&](std::uint32_t mask) {
    for (std::uint32_t f : found_masks)
      if ((f & mask) == f) return;  // contains a smaller solution
    if (property(set_from_mask(mask))) {
      found_masks.push_back(mask);
      out.push_back(set_from_mask(mask));
    }
  };
  consider(0u);
  for (int size = 1; size <= universe; ++size) {
    std::uint32_t mask = (1u << size) - 1u;
    while (mask != 0) {
      consider(mask);
      mask = next_same_popcount(mask, full);
    }
  }
  sort_family(out);
  return out;
}

std::vector<VertexSet> brute_transversals(const Hypergraph& h) {
  validate_hypergraph(h);
  return brute_minimal(h.n, [&](const VertexSet& s) {
    for (const auto& e : h.edges)
      if (e.intersect(s).empty()) return false;
    return true;
  });
}

std::vector<VertexSet> brute_min_valid_aug(const ContractedBipartite& h) {
  const auto& rights = h.rights();
  if (rights.size() > 20)
    throw contract_error("brute_min_valid_aug: too many right vertices");
  auto prop = [&](const VertexSet& positions) {
    // positions index into the right list
    std::vector<int> ids;
    for (int p : positions) ids.push_back(rights[static_cast<size_t>(p)]);
    return h.valid_augmentation(VertexSet(std::move(ids)));
  };
  std::vector<VertexSet> by_position =
      brute_minimal(static_cast<int>(rights.size()), prop);
  std::vector<VertexSet> out;
  out.reserve(by_position.size());
  for (const auto& positions : by_position) {
    std::vector<int> ids;
    for (int p : positions) ids.push_back(rights[static_cast<size_t>(p)]);
    out.emplace_back(std::move(ids));
  }
  sort_family(out);
  return out;
}

}  // namespace oracle
}  // namespace covenum
