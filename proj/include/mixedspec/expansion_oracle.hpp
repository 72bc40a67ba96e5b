#ifndef MIXEDSPEC_EXPANSION_ORACLE_HPP
#define MIXEDSPEC_EXPANSION_ORACLE_HPP

// Characteristic-polynomial coefficients by summing over elementary
// subgraphs (vertex-disjoint packings of single edges and cycles). This is
// exponential on purpose: it is the independent reference for the numeric
// trace recursion.

#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "mixedspec/errors.hpp"
#include "mixedspec/graph_core.hpp"
#include "mixedspec/phase.hpp"
#include "mixedspec/spectra.hpp"

namespace mixedspec {

inline constexpr int kExpansionMaxOrder = 12;

struct RankData {
  /// #vertices - #components
  int rank = 0;
  /// number of cycle components
  int corank = 0;

  friend bool operator==(const RankData&, const RankData&) = default;
};

struct ElementarySubgraph {
  /// Components isomorphic to K2, as (low, high).
  std::vector<std::pair<int, int>> p2_edges;
  /// Cycle components as canonical closed walks.
  std::vector<Walk> cycles;
  std::uint32_t vertex_mask = 0;

  int vertex_count() const { return std::popcount(vertex_mask); }

  std::vector<int> vertex_set() const {
    std::vector<int> out;
    for (int v = 0; v < 32; ++v) {
      if (vertex_mask & (1u << v)) out.push_back(v);
    }
    return out;
  }

  RankData rank_data() const {
    const int components = static_cast<int>(p2_edges.size() + cycles.size());
    return {vertex_count() - components, static_cast<int>(cycles.size())};
  }
};

namespace detail {

struct Component {
  std::uint32_t mask = 0;
  int lowest = 0;
  bool is_cycle = false;
  std::pair<int, int> edge;
  Walk cycle;
};

inline void check_oracle_scale(const MixedGraph& g) {
  if (g.order() > kExpansionMaxOrder) {
    throw PreconditionError("expansion oracle is limited to graphs with at most " +
                            std::to_string(kExpansionMaxOrder) + " vertices");
  }
}

/// Visits every elementary subgraph of Γ(D) exactly once, including the
/// empty one. Components are indexed by their smallest vertex; each vertex,
/// taken in increasing order, is either left uncovered or covered by a
/// component whose smallest vertex it is.
inline void for_each_elementary(const MixedGraph& g,
                                const std::function<void(const ElementarySubgraph&)>& visit) {
  check_oracle_scale(g);
  const int n = g.order();
  const UndirectedGraph gamma = underlying(g);

  std::vector<std::vector<Component>> menu(static_cast<std::size_t>(n));
  for (auto [a, b] : gamma.edges()) {
    menu[a].push_back({(1u << a) | (1u << b), a, false, {a, b}, {}});
  }
  if (n >= 3) {
    for (Walk& c : enumerate_simple_cycles(gamma, n)) {
      std::uint32_t mask = 0;
      for (int v : c.vertices) mask |= 1u << v;
      const int lowest = c.vertices.front();
      menu[lowest].push_back({mask, lowest, true, {}, std::move(c)});
    }
  }

  ElementarySubgraph current;
  std::function<void(int)> recurse = [&](int v) {
    while (v < n && (current.vertex_mask & (1u << v))) ++v;
    if (v >= n) {
      visit(current);
      return;
    }
    recurse(v + 1);
    for (const Component& c : menu[v]) {
      if (c.mask & current.vertex_mask) continue;
      current.vertex_mask |= c.mask;
      if (c.is_cycle) {
        current.cycles.push_back(c.cycle);
      } else {
        current.p2_edges.push_back(c.edge);
      }
      recurse(v + 1);
      if (c.is_cycle) {
        current.cycles.pop_back();
      } else {
        current.p2_edges.pop_back();
      }
      current.vertex_mask &= ~c.mask;
    }
  };
  recurse(0);
}

inline void validate_elementary(const MixedGraph& g, const ElementarySubgraph& s) {
  std::uint32_t seen = 0;
  auto claim = [&](int v) {
    if (v < 0 || v >= g.order() || v >= 32) throw PreconditionError("elementary subgraph: bad vertex");
    if (seen & (1u << v)) throw PreconditionError("elementary subgraph: components overlap");
    seen |= 1u << v;
  };
  for (auto [a, b] : s.p2_edges) {
    if (a < 0 || b < 0 || a >= g.order() || b >= g.order() || !g.adjacent(a, b)) {
      throw PreconditionError("elementary subgraph: edge not in graph");
    }
    claim(a);
    claim(b);
  }
  for (const Walk& c : s.cycles) {
    if (!c.closed() || c.edge_count() < 3) throw PreconditionError("elementary subgraph: bad cycle");
    validate_walk(g, c);
    for (std::size_t k = 0; k + 1 < c.vertices.size(); ++k) claim(c.vertices[k]);
  }
  if (seen != s.vertex_mask) throw PreconditionError("elementary subgraph: vertex mask mismatch");
}

inline long double term_unchecked(const MixedGraph& g, const UnitPhase& alpha,
                                  const ElementarySubgraph& s) {
  const RankData rd = s.rank_data();
  long double product = 1.0L;
  for (const Walk& c : s.cycles) product *= walk_value_h(g, alpha, c).real_part();
  const long double sign = rd.rank % 2 == 0 ? 1.0L : -1.0L;
  return sign * std::ldexp(1.0L, rd.corank) * product;
}

}  // namespace detail

/// Every elementary subgraph of Γ(D) covering exactly k vertices.
inline std::vector<ElementarySubgraph> enumerate_elementary(const MixedGraph& g, int k) {
  detail::check_oracle_scale(g);
  if (k < 0 || k > g.order()) throw PreconditionError("enumerate_elementary: k out of range");
  std::vector<ElementarySubgraph> out;
  detail::for_each_elementary(g, [&](const ElementarySubgraph& s) {
    if (s.vertex_count() == k) out.push_back(s);
  });
  return out;
}

/// (-1)^{rank} 2^{corank} ∏_C Re h_α(C): each cycle may be traversed
/// either way independently.
inline double subgraph_term(const MixedGraph& g, const UnitPhase& alpha, const ElementarySubgraph& s) {
  detail::validate_elementary(g, s);
  return static_cast<double>(detail::term_unchecked(g, alpha, s));
}

/// c_k = (-1)^k Σ over k-vertex elementary subgraphs of their terms.
inline CharPoly char_poly_expansion(const MixedGraph& g, const UnitPhase& alpha) {
  detail::check_oracle_scale(g);
  std::vector<long double> sums(static_cast<std::size_t>(g.order()) + 1, 0.0L);
  detail::for_each_elementary(g, [&](const ElementarySubgraph& s) {
    sums[s.vertex_count()] += detail::term_unchecked(g, alpha, s);
  });
  CharPoly p;
  for (int k = 1; k <= g.order(); ++k) {
    const long double c = k % 2 == 0 ? sums[k] : -sums[k];
    p.coefficients.push_back(c == 0.0L ? 0.0 : static_cast<double>(c));
  }
  return p;
}

/// det(H^α) as the sum over spanning elementary subgraphs.
inline double determinant_expansion(const MixedGraph& g, const UnitPhase& alpha) {
  long double det = 0.0L;
  for (const auto& s : enumerate_elementary(g, g.order())) det += detail::term_unchecked(g, alpha, s);
  return static_cast<double>(det);
}

}  // namespace mixedspec

#endif  // MIXEDSPEC_EXPANSION_ORACLE_HPP
