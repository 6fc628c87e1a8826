#include "covenum/capacity.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "covenum/errors.hpp"

namespace covenum {

int CapacityFn::max() const {
  int q = 0;
  for (int c : cap) q = std::max(q, c);
  return q;
}

CapacityFn CapacityFn::uniform(int n, int value) {
  if (n < 0) throw input_error("capacities: negative vertex count");
  if (value < 0) throw input_error("capacities: negative capacity");
  return CapacityFn{std::vector<int>(static_cast<size_t>(n), value)};
}

CapacityFn parse_capacities(std::istream& in, int n) {
  CapacityFn c;
  c.cap.assign(static_cast<size_t>(n), -1);
  std::string line;
  int lineno = 0;
  int filled = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    int v = 0, value = 0;
    std::string extra;
    if (!(ls >> v >> value) || (ls >> extra))
      throw parse_error("line " + std::to_string(lineno) +
                        ": expected 'v c'");
    if (v < 0 || v >= n)
      throw parse_error("line " + std::to_string(lineno) +
                        ": vertex id out of range");
    if (value < 0)
      throw parse_error("line " + std::to_string(lineno) +
                        ": capacity must be non-negative");
    if (c.cap[static_cast<size_t>(v)] != -1)
      throw parse_error("line " + std::to_string(lineno) +
                        ": duplicate capacity for vertex " +
                        std::to_string(v));
    c.cap[static_cast<size_t>(v)] = value;
    ++filled;
  }
  if (filled != n)
    throw parse_error("capacities: expected one line per vertex, got " +
                      std::to_string(filled) + " of " + std::to_string(n));
  return c;
}

CapacityFn parse_capacities_text(const std::string& text, int n) {
  std::istringstream in(text);
  return parse_capacities(in, n);
}

void write_capacities(std::ostream& out, const CapacityFn& c) {
  for (size_t v = 0; v < c.cap.size(); ++v)
    out << v << " " << c.cap[v] << "\n";
}

}  // namespace covenum
