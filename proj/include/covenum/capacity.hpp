#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace covenum {

// Capacity function c: V -> {0,1,2,...}, stored as cap[v].
struct CapacityFn {
  std::vector<int> cap;

  int max() const;
  static CapacityFn uniform(int n, int value);
};

// Text format: n lines "v c", one per vertex, each vertex exactly once.
CapacityFn parse_capacities(std::istream& in, int n);
CapacityFn parse_capacities_text(const std::string& text, int n);
void write_capacities(std::ostream& out, const CapacityFn& c);

}  // namespace covenum
