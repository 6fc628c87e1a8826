#include "covenum/hypergraph.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "covenum/errors.hpp"

namespace covenum {

Hypergraph parse_hypergraph(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_line = [&](const std::string& what) {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return;
    }
    throw parse_error("unexpected end of input, expected " + what);
  };

  next_line("header 'n m'");
  std::istringstream header(line);
  int n = 0, m = 0;
  std::string extra;
  if (!(header >> n >> m) || (header >> extra))
    throw parse_error("line " + std::to_string(lineno) +
                      ": expected header 'n m'");
  if (n < 0 || m < 0)
    throw parse_error("line " + std::to_string(lineno) +
                      ": counts must be non-negative");

  Hypergraph h;
  h.n = n;
  for (int i = 0; i < m; ++i) {
    next_line("a hyperedge line");
    std::istringstream es(line);
    std::vector<int> members;
    int v = 0;
    while (es >> v) {
      if (v < 0 || v >= n)
        throw parse_error("line " + std::to_string(lineno) +
                          ": vertex id out of range");
      members.push_back(v);
    }
    if (!es.eof())
      throw parse_error("line " + std::to_string(lineno) +
                        ": bad token in hyperedge");
    if (members.empty())
      throw parse_error("line " + std::to_string(lineno) +
                        ": empty hyperedge");
    VertexSet e(members);
    if (e.size() != static_cast<int>(members.size()))
      throw parse_error("line " + std::to_string(lineno) +
                        ": duplicate vertex in hyperedge");
    h.edges.push_back(std::move(e));
  }
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") != std::string::npos)
      throw parse_error("line " + std::to_string(lineno) +
                        ": trailing content after " + std::to_string(m) +
                        " hyperedges");
  }
  return h;
}

Hypergraph parse_hypergraph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << h.n << " " << h.edges.size() << "\n";
  for (const auto& e : h.edges) {
    bool first = true;
    for (int v : e) {
      if (!first) out << " ";
      out << v;
      first = false;
    }
    out << "\n";
  }
}

void validate_hypergraph(const Hypergraph& h) {
  if (h.n < 0) throw input_error("hypergraph: negative vertex count");
  for (const auto& e : h.edges) {
    if (e.empty()) throw input_error("hypergraph: empty hyperedge");
    if (e.ids().front() < 0 || e.ids().back() >= h.n)
      throw input_error("hypergraph: vertex id out of range");
  }
}

}  // namespace covenum
