#ifndef MIXEDSPEC_GRAPH_CORE_HPP
#define MIXEDSPEC_GRAPH_CORE_HPP

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mixedspec/errors.hpp"

namespace mixedspec {

enum class EdgeKind : std::uint8_t { Digon, Arc };

/// One edge of a mixed graph. An Arc points from u to v; a Digon is stored
/// with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  EdgeKind kind = EdgeKind::Digon;

  static Edge digon(int a, int b) { return {std::min(a, b), std::max(a, b), EdgeKind::Digon}; }
  static Edge arc(int from, int to) { return {from, to, EdgeKind::Arc}; }

  int low() const { return std::min(u, v); }
  int high() const { return std::max(u, v); }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge& a, const Edge& b) {
    if (auto c = a.low() <=> b.low(); c != 0) return c;
    if (auto c = a.high() <=> b.high(); c != 0) return c;
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    return a.u <=> b.u;
  }
};

/// How the ordered pair (u, v) is joined. Forward means an arc u -> v,
/// Backward an arc v -> u.
enum class Relation : std::int8_t { None, Digon, Forward, Backward };

/// A closed walk repeats its first vertex at the end.
struct Walk {
  std::vector<int> vertices;

  bool closed() const { return vertices.size() > 1 && vertices.front() == vertices.back(); }
  std::size_t edge_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }

  Walk reversed() const { return Walk{{vertices.rbegin(), vertices.rend()}}; }

  friend bool operator==(const Walk&, const Walk&) = default;
};

/// Concatenates two walks where the end of `first` is the start of `second`.
inline Walk concatenate(const Walk& first, const Walk& second) {
  if (first.vertices.empty()) return second;
  if (second.vertices.empty()) return first;
  if (first.vertices.back() != second.vertices.front()) {
    throw PreconditionError("concatenate: walks do not meet");
  }
  Walk out = first;
  out.vertices.insert(out.vertices.end(), second.vertices.begin() + 1, second.vertices.end());
  return out;
}

/// Simple undirected graph on vertices 0..n-1.
class UndirectedGraph {
 public:
  explicit UndirectedGraph(int n = 0) : n_(n), adjacency_(static_cast<std::size_t>(n)) {}

  UndirectedGraph(int n, const std::vector<std::pair<int, int>>& edges) : UndirectedGraph(n) {
    for (auto [a, b] : edges) {
      if (a == b || a < 0 || b < 0 || a >= n || b >= n) {
        throw InputError("undirected graph: invalid edge");
      }
      if (has_edge(a, b)) throw InputError("undirected graph: duplicate edge");
      adjacency_[a].push_back(b);
      adjacency_[b].push_back(a);
      edges_.emplace_back(std::min(a, b), std::max(a, b));
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
    std::sort(edges_.begin(), edges_.end());
  }

  int order() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int u) const { return adjacency_[u]; }

  bool has_edge(int a, int b) const {
    const auto& list = adjacency_[a];
    return std::find(list.begin(), list.end(), b) != list.end();
  }

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
};

/// A partially oriented simple graph: every adjacent pair is joined by
/// exactly one digon or one arc. Immutable once built.
class MixedGraph {
 public:
  explicit MixedGraph(int n = 0)
      : n_(checked_order(n)),
        relation_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), Relation::None),
        adjacency_(static_cast<std::size_t>(n_)) {}

  /// Throws InputError on loops, duplicate pairs, or out-of-range endpoints.
  MixedGraph(int n, std::vector<Edge> edges) : MixedGraph(n) {
    for (Edge e : edges) add(e);
    finish();
  }

  int order() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  Relation relation(int u, int v) const {
    return relation_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)];
  }
  bool adjacent(int u, int v) const { return relation(u, v) != Relation::None; }

  /// Neighbours in the underlying graph, ascending.
  const std::vector<int>& neighbors(int u) const { return adjacency_[u]; }

  /// N_D(u): digon neighbours.
  std::vector<int> digon_neighbors(int u) const { return neighbors_with(u, Relation::Digon); }
  /// N_D^+(u): heads of arcs leaving u.
  std::vector<int> out_neighbors(int u) const { return neighbors_with(u, Relation::Forward); }
  /// N_D^-(u): tails of arcs entering u.
  std::vector<int> in_neighbors(int u) const { return neighbors_with(u, Relation::Backward); }

  friend bool operator==(const MixedGraph& a, const MixedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  friend MixedGraph parse_graph(std::string_view text);

  static int checked_order(int n) {
    if (n < 0) throw InputError("vertex count must be non-negative");
    return n;
  }

  void add(Edge e) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
      throw InputError("vertex id out of range: " + std::to_string(std::max(e.u, e.v)));
    }
    if (e.u == e.v) throw InputError("loop at vertex " + std::to_string(e.u));
    if (adjacent(e.u, e.v)) {
      throw InputError("duplicate pair " + std::to_string(e.low()) + "," + std::to_string(e.high()));
    }
    if (e.kind == EdgeKind::Digon) {
      e = Edge::digon(e.u, e.v);
      set(e.u, e.v, Relation::Digon);
      set(e.v, e.u, Relation::Digon);
    } else {
      set(e.u, e.v, Relation::Forward);
      set(e.v, e.u, Relation::Backward);
    }
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
    edges_.push_back(e);
  }

  void finish() {
    std::sort(edges_.begin(), edges_.end());
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  }

  void set(int u, int v, Relation r) {
    relation_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)] = r;
  }

  std::vector<int> neighbors_with(int u, Relation r) const {
    std::vector<int> out;
    for (int v : adjacency_[u]) {
      if (relation(u, v) == r) out.push_back(v);
    }
    return out;
  }

  int n_;
  std::vector<Edge> edges_;
  std::vector<Relation> relation_;
  std::vector<std::vector<int>> adjacency_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n\v\f";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

inline bool parse_int(std::string_view token, int& value) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc{} && ptr == end;
}

}  // namespace detail

/// Parses the text graph format: a vertex count, then one `u -- v` (digon)
/// or `u -> v` (arc) per line. `#` starts a comment; blank lines are skipped.
inline MixedGraph parse_graph(std::string_view text) {
  std::optional<MixedGraph> graph;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;

    if (!graph) {
      int n = 0;
      if (!detail::parse_int(line, n) || n < 0) {
        throw ParseError(line_no, "expected a non-negative vertex count, got '" + std::string(line) + "'");
      }
      graph.emplace(n);
      continue;
    }

    std::istringstream tokens{std::string(line)};
    std::string a, op, b, extra;
    if (!(tokens >> a >> op >> b) || (tokens >> extra) || (op != "--" && op != "->")) {
      throw ParseError(line_no, "expected 'u -- v' or 'u -> v', got '" + std::string(line) + "'");
    }
    int u = 0, v = 0;
    if (!detail::parse_int(a, u) || !detail::parse_int(b, v) || u < 0 || v < 0) {
      throw ParseError(line_no, "vertex ids must be non-negative integers");
    }
    try {
      graph->add(op == "--" ? Edge::digon(u, v) : Edge::arc(u, v));
    } catch (const InputError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!graph) throw ParseError(line_no, "missing vertex count");
  graph->finish();
  return std::move(*graph);
}

/// Canonical text form; parse_graph(serialize_graph(g)) == g.
inline std::string serialize_graph(const MixedGraph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << (e.kind == EdgeKind::Digon ? " -- " : " -> ") << e.v << '\n';
  }
  return out.str();
}

/// Γ(D): forget every orientation.
inline UndirectedGraph underlying(const MixedGraph& g) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(g.edge_count());
  for (const Edge& e : g.edges()) pairs.emplace_back(e.low(), e.high());
  return UndirectedGraph(g.order(), pairs);
}

/// The undirected graph read as a mixed graph made only of digons.
inline MixedGraph as_mixed(const UndirectedGraph& g) {
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) edges.push_back(Edge::digon(a, b));
  return MixedGraph(g.order(), std::move(edges));
}

/// Vertex-disjoint union; vertices of `b` are shifted by a.order().
inline MixedGraph disjoint_union(const MixedGraph& a, const MixedGraph& b) {
  std::vector<Edge> edges = a.edges();
  const int shift = a.order();
  for (Edge e : b.edges()) edges.push_back({e.u + shift, e.v + shift, e.kind});
  return MixedGraph(a.order() + b.order(), std::move(edges));
}

struct DegreeProfile {
  std::vector<int> degrees;
  int max_degree = 0;
  bool regular = true;
};

inline DegreeProfile degree_profile(const MixedGraph& g) {
  DegreeProfile p;
  for (int u = 0; u < g.order(); ++u) {
    p.degrees.push_back(static_cast<int>(g.neighbors(u).size()));
  }
  if (!p.degrees.empty()) {
    const auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
    p.max_degree = *hi;
    p.regular = *lo == *hi;
  }
  return p;
}

/// Components of Γ(D), each sorted, ordered by smallest member.
inline std::vector<std::vector<int>> connected_components(const MixedGraph& g) {
  std::vector<std::vector<int>> components;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  for (int root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::vector<int> members{root};
    seen[root] = true;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (int w : g.neighbors(members[i])) {
        if (!seen[w]) {
          seen[w] = true;
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    components.push_back(std::move(members));
  }
  return components;
}

inline bool is_connected(const MixedGraph& g) { return connected_components(g).size() <= 1; }

/// Rotates a closed simple cycle so that it starts at its smallest vertex and
/// takes the direction whose second vertex is smaller.
inline Walk canonical_cycle(const Walk& cycle) {
  std::vector<int> ring(cycle.vertices.begin(), cycle.vertices.end() - 1);
  const auto min_it = std::min_element(ring.begin(), ring.end());
  std::rotate(ring.begin(), min_it, ring.end());
  if (ring.size() > 2 && ring[1] > ring.back()) std::reverse(ring.begin() + 1, ring.end());
  ring.push_back(ring.front());
  return Walk{std::move(ring)};
}

struct FundamentalCycleBasis {
  /// BFS parent of each vertex; -1 for component roots.
  std::vector<int> parent;
  /// Vertices in BFS visiting order, component by component.
  std::vector<int> bfs_order;
  /// Spanning-forest edges as (parent, child).
  std::vector<std::pair<int, int>> tree_edges;
  /// One closed walk per non-tree edge, in canonical rotation.
  std::vector<Walk> cycles;
  int component_count = 0;
};

/// BFS spanning forest rooted at the smallest vertex of each component, and
/// the cycle closed by each non-tree edge.
inline FundamentalCycleBasis fundamental_cycles(const MixedGraph& g) {
  const int n = g.order();
  FundamentalCycleBasis basis;
  basis.parent.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), -1);

  for (int root = 0; root < n; ++root) {
    if (depth[root] >= 0) continue;
    ++basis.component_count;
    depth[root] = 0;
    std::queue<int> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      basis.bfs_order.push_back(u);
      for (int w : g.neighbors(u)) {
        if (depth[w] < 0) {
          depth[w] = depth[u] + 1;
          basis.parent[w] = u;
          basis.tree_edges.emplace_back(u, w);
          frontier.push(w);
        }
      }
    }
  }

  for (const Edge& e : g.edges()) {
    const int a = e.low();
    const int b = e.high();
    if (basis.parent[a] == b || basis.parent[b] == a) continue;
    // Tree path a -> lca -> b, closed by the edge b -- a.
    std::vector<int> up_a{a};
    std::vector<int> up_b{b};
    int x = a, y = b;
    while (depth[x] > depth[y]) up_a.push_back(x = basis.parent[x]);
    while (depth[y] > depth[x]) up_b.push_back(y = basis.parent[y]);
    while (x != y) {
      up_a.push_back(x = basis.parent[x]);
      up_b.push_back(y = basis.parent[y]);
    }
    up_b.pop_back();
    Walk cycle{std::move(up_a)};
    cycle.vertices.insert(cycle.vertices.end(), up_b.rbegin(), up_b.rend());
    cycle.vertices.push_back(a);
    basis.cycles.push_back(canonical_cycle(cycle));
  }
  return basis;
}

/// All simple cycles of length 3..max_len, each once, as canonical closed
/// walks. Exhaustive backtracking; meant for small graphs.
inline std::vector<Walk> enumerate_simple_cycles(const UndirectedGraph& g, int max_len) {
  if (max_len < 3) throw PreconditionError("enumerate_simple_cycles: max_len must be at least 3");
  std::vector<Walk> cycles;
  std::vector<int> path;
  std::vector<bool> on_path(static_cast<std::size_t>(g.order()), false);

  std::function<void(int)> extend = [&](int u) {
    const int root = path.front();
    for (int w : g.neighbors(u)) {
      if (w == root && path.size() >= 3 && path[1] < path.back()) {
        Walk c{path};
        c.vertices.push_back(root);
        cycles.push_back(std::move(c));
      } else if (w > root && !on_path[w] && static_cast<int>(path.size()) < max_len) {
        on_path[w] = true;
        path.push_back(w);
        extend(w);
        path.pop_back();
        on_path[w] = false;
      }
    }
  };

  for (int root = 0; root < g.order(); ++root) {
    path.assign(1, root);
    on_path[root] = true;
    extend(root);
    on_path[root] = false;
  }
  return cycles;
}

/// Throws PreconditionError unless consecutive walk vertices are adjacent.
inline void validate_walk(const MixedGraph& g, const Walk& w) {
  if (w.vertices.empty()) throw PreconditionError("walk is empty");
  for (int v : w.vertices) {
    if (v < 0 || v >= g.order()) throw PreconditionError("walk leaves the vertex set");
  }
  for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) {
    if (!g.adjacent(w.vertices[i], w.vertices[i + 1])) {
      throw PreconditionError("walk steps between non-adjacent vertices " +
                              std::to_string(w.vertices[i]) + " and " +
                              std::to_string(w.vertices[i + 1]));
    }
  }
}

/// True iff Γ(D) has no cycle.
inline bool is_forest(const MixedGraph& g) {
  return g.edge_count() + connected_components(g).size() == static_cast<std::size_t>(g.order());
}

/// Two-colouring of Γ(D); std::nullopt when an odd cycle exists.
inline std::optional<std::vector<int>> bipartition(const MixedGraph& g) {
  std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
  for (int root = 0; root < g.order(); ++root) {
    if (colour[root] >= 0) continue;
    colour[root] = 0;
    std::queue<int> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (int w : g.neighbors(u)) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[u];
          frontier.push(w);
        } else if (colour[w] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

}  // namespace mixedspec

#endif  // MIXEDSPEC_GRAPH_CORE_HPP
