#include "covenum/properties.hpp"

#include <vector>

#include "covenum/errors.hpp"

namespace covenum {

namespace {

bool is_vertex_cover(const Graph& g, const std::vector<char>& in_x) {
  for (const auto& [u, v] : g.edges())
    if (!in_x[static_cast<size_t>(u)] && !in_x[static_cast<size_t>(v)])
      return false;
  return true;
}

bool is_dominating_set(const Graph& g, const std::vector<char>& in_x) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (in_x[static_cast<size_t>(v)]) continue;
    bool dominated = false;
    for (int w : g.neighbors(v)) {
      if (in_x[static_cast<size_t>(w)]) {
        dominated = true;
        break;
      }
    }
    if (!dominated) return false;
  }
  return true;
}

}  // namespace

bool check_basic_property(const Graph& g, const VertexSet& x,
                          BasicProperty p) {
  const int n = g.vertex_count();
  std::vector<char> in_x(static_cast<size_t>(n), 0);
  for (int v : x) {
    if (v < 0 || v >= n)
      throw contract_error("check_basic_property: vertex out of range");
    in_x[static_cast<size_t>(v)] = 1;
  }
  switch (p) {
    case BasicProperty::vertex_cover:
      return is_vertex_cover(g, in_x);
    case BasicProperty::dominating_set:
      return is_dominating_set(g, in_x);
    case BasicProperty::connected_vertex_cover:
      return is_vertex_cover(g, in_x) && induced_connected(g, x);
    case BasicProperty::connected_dominating_set:
      return is_dominating_set(g, in_x) && induced_connected(g, x);
  }
  throw contract_error("check_basic_property: unknown property");
}

}  // namespace covenum
