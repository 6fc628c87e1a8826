#include "covenum/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "covenum/errors.hpp"

namespace covenum {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw input_error("graph: vertex count must be non-negative");
  adj_.resize(static_cast<size_t>(n));
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw input_error("graph: edge endpoint out of range");
  if (u == v) throw input_error("graph: self loops are not allowed");
  if (has_edge(u, v)) throw input_error("graph: duplicate edge");
  auto& au = adj_[static_cast<size_t>(u)];
  au.insert(std::lower_bound(au.begin(), au.end(), v), v);
  auto& av = adj_[static_cast<size_t>(v)];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  edges_.emplace_back(std::min(u, v), std::max(u, v));
}

std::span<const int> Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw contract_error("graph: vertex out of range");
  return adj_[static_cast<size_t>(v)];
}

int Graph::degree(int v) const {
  return static_cast<int>(neighbors(v).size());
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v)
    d = std::max(d, static_cast<int>(adj_[static_cast<size_t>(v)].size()));
  return d;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  const auto& au = adj_[static_cast<size_t>(u)];
  return std::binary_search(au.begin(), au.end(), v);
}

namespace {

// Splits a stream into whitespace-separated tokens, remembering the line
// each token came from so parse errors can point at it.
struct TokenReader {
  explicit TokenReader(std::istream& in) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) tokens.emplace_back(tok, lineno);
    }
  }

  bool done() const { return pos >= tokens.size(); }

  int next_int(const std::string& what) {
    if (done())
      throw parse_error("unexpected end of input, expected " + what);
    const auto& [tok, line] = tokens[pos++];
    size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw parse_error("line " + std::to_string(line) + ": expected " +
                        what + ", got '" + tok + "'");
    }
    if (used != tok.size() || value < -1000000000LL || value > 1000000000LL)
      throw parse_error("line " + std::to_string(line) + ": expected " +
                        what + ", got '" + tok + "'");
    last_line = line;
    return static_cast<int>(value);
  }

  int current_line() const { return last_line; }

  std::vector<std::pair<std::string, int>> tokens;
  size_t pos = 0;
  int last_line = 0;
};

}  // namespace

Graph parse_graph(std::istream& in) {
  TokenReader r(in);
  int n = r.next_int("vertex count");
  int m = r.next_int("edge count");
  if (n < 0) throw parse_error("line 1: vertex count must be non-negative");
  if (m < 0) throw parse_error("line 1: edge count must be non-negative");
  Graph g(n);
  for (int i = 0; i < m; ++i) {
    int u = r.next_int("edge endpoint");
    int v = r.next_int("edge endpoint");
    try {
      g.add_edge(u, v);
    } catch (const input_error& e) {
      throw parse_error("line " + std::to_string(r.current_line()) + ": " +
                        e.what());
    }
  }
  if (!r.done())
    throw parse_error("trailing tokens after " + std::to_string(m) +
                      " edges");
  return g;
}

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

std::vector<VertexSet> induced_components(const Graph& g, const VertexSet& x) {
  const int n = g.vertex_count();
  std::vector<char> in_x(static_cast<size_t>(n), 0);
  for (int v : x) {
    if (v < 0 || v >= n)
      throw contract_error("induced_components: vertex out of range");
    in_x[static_cast<size_t>(v)] = 1;
  }
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<VertexSet> comps;
  std::vector<int> stack, members;
  for (int s : x) {
    if (seen[static_cast<size_t>(s)]) continue;
    members.clear();
    stack.push_back(s);
    seen[static_cast<size_t>(s)] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int w : g.neighbors(v)) {
        if (in_x[static_cast<size_t>(w)] && !seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    comps.emplace_back(members);
  }
  return comps;
}

bool induced_connected(const Graph& g, const VertexSet& x) {
  if (x.empty()) return true;
  const int n = g.vertex_count();
  std::vector<char> in_x(static_cast<size_t>(n), 0);
  for (int v : x) {
    if (v < 0 || v >= n)
      throw contract_error("induced_connected: vertex out of range");
    in_x[static_cast<size_t>(v)] = 1;
  }
  std::vector<int> stack{x.ids().front()};
  std::vector<char> seen(static_cast<size_t>(n), 0);
  seen[static_cast<size_t>(x.ids().front())] = 1;
  int reached = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int w : g.neighbors(v)) {
      if (in_x[static_cast<size_t>(w)] && !seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return reached == x.size();
}

bool is_connected(const Graph& g) {
  return induced_connected(g, VertexSet::range(g.vertex_count()));
}

bool is_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<size_t>(n), -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<size_t>(s)] != -1) continue;
    color[static_cast<size_t>(s)] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (color[static_cast<size_t>(w)] == -1) {
          color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
          stack.push_back(w);
        } else if (color[static_cast<size_t>(w)] ==
                   color[static_cast<size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::pair<std::vector<int>, int> degeneracy_ordering(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(static_cast<size_t>(n));
  std::vector<char> removed(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = g.degree(v);
  std::vector<int> order;
  order.reserve(static_cast<size_t>(n));
  int degeneracy = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (removed[static_cast<size_t>(v)]) continue;
      if (best == -1 || deg[static_cast<size_t>(v)] < deg[static_cast<size_t>(best)])
        best = v;
    }
    degeneracy = std::max(degeneracy, deg[static_cast<size_t>(best)]);
    removed[static_cast<size_t>(best)] = 1;
    order.push_back(best);
    for (int w : g.neighbors(best))
      if (!removed[static_cast<size_t>(w)]) --deg[static_cast<size_t>(w)];
  }
  return {order, degeneracy};
}

}  // namespace covenum
