#ifndef MIXEDSPEC_TESTS_SUPPORT_HPP
#define MIXEDSPEC_TESTS_SUPPORT_HPP

// Brute-force oracles and random generators shared by the test suites.
// Nothing here calls into the code paths it is used to check.

#include <algorithm>
#include <bit>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mixedspec/mixedspec.hpp"

namespace mixedspec::testing {

inline std::string fixture_path(const std::string& name) { return std::string(MIXEDSPEC_FIXTURES) + "/" + name; }

inline MixedGraph load_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  return parse_graph(std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()));
}

inline MixedGraph t2() { return MixedGraph(2, {Edge::arc(0, 1)}); }
inline MixedGraph dc3() { return MixedGraph(3, {Edge::arc(0, 1), Edge::arc(1, 2), Edge::arc(2, 0)}); }
inline MixedGraph uc3() { return MixedGraph(3, {Edge::digon(0, 1), Edge::digon(1, 2), Edge::digon(0, 2)}); }
inline MixedGraph ac4() {
  return MixedGraph(4, {Edge::arc(0, 1), Edge::arc(2, 1), Edge::arc(2, 3), Edge::arc(0, 3)});
}
inline MixedGraph dc4() {
  return MixedGraph(4, {Edge::arc(0, 1), Edge::arc(1, 2), Edge::arc(2, 3), Edge::arc(3, 0)});
}
inline MixedGraph k4_digons() {
  std::vector<Edge> e;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) e.push_back(Edge::digon(a, b));
  return MixedGraph(4, e);
}

/// Number of Hamiltonian cycles of the subgraph induced by each vertex
/// subset, summed: every simple cycle is counted once.
inline std::size_t brute_force_cycle_count(const UndirectedGraph& g, int max_len) {
  const int n = g.order();
  std::size_t total = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int k = std::popcount(mask);
    if (k < 3 || k > max_len) continue;
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) verts.push_back(v);
    // Fix the first vertex, permute the rest, halve for direction.
    std::vector<int> rest(verts.begin() + 1, verts.end());
    std::size_t found = 0;
    do {
      bool ok = g.has_edge(verts[0], rest.front()) && g.has_edge(rest.back(), verts[0]);
      for (std::size_t j = 0; ok && j + 1 < rest.size(); ++j) ok = g.has_edge(rest[j], rest[j + 1]);
      if (ok) ++found;
    } while (std::next_permutation(rest.begin(), rest.end()));
    total += found / 2;
  }
  return total;
}

/// Edge subsets whose every component is a single edge or a cycle,
/// bucketed by covered vertex count.
inline std::vector<std::size_t> brute_force_elementary_counts(const UndirectedGraph& g) {
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  const int n = g.order();
  std::vector<std::size_t> counts(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << m); ++subset) {
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    for (int e = 0; e < m; ++e) {
      if (subset >> e & 1) {
        ++degree[edges[e].first];
        ++degree[edges[e].second];
      }
    }
    bool ok = true;
    int covered = 0;
    for (int v = 0; v < n && ok; ++v) {
      if (degree[v] > 2) ok = false;
      if (degree[v] > 0) ++covered;
    }
    // A degree-1 vertex must sit on an isolated edge: its partner has degree 1.
    for (int e = 0; e < m && ok; ++e) {
      if (!(subset >> e & 1)) continue;
      const int a = degree[edges[e].first];
      const int b = degree[edges[e].second];
      if ((a == 1) != (b == 1)) ok = false;
    }
    if (ok) ++counts[covered];
  }
  return counts;
}

/// c_k via (-1)^k times the sum of k x k principal minors, determinants by
/// partial-pivot LU.
inline std::vector<double> principal_minor_coefficients(const Eigen::MatrixXcd& h) {
  const int n = static_cast<int>(h.rows());
  std::vector<std::complex<double>> sums(static_cast<std::size_t>(n) + 1, 0.0);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) idx.push_back(v);
    const int k = static_cast<int>(idx.size());
    Eigen::MatrixXcd sub(k, k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) sub(a, b) = h(idx[a], idx[b]);
    sums[k] += sub.determinant();
  }
  std::vector<double> c;
  for (int k = 1; k <= n; ++k) c.push_back((k % 2 == 0 ? 1.0 : -1.0) * sums[k].real());
  return c;
}

/// Monograph test straight from the definition: every simple cycle of Γ(D)
/// has value 1. Cycle values are tracked as integer (balance, length).
inline bool brute_force_monograph(const MixedGraph& g, const UnitPhase& alpha, MonographKind kind) {
  const int n = g.order();
  if (n < 3) return true;
  const UndirectedGraph gamma = underlying(g);
  // Independent cycle listing by subsets and permutations.
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) < 3) continue;
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) verts.push_back(v);
    std::vector<int> rest(verts.begin() + 1, verts.end());
    do {
      std::vector<int> ring{verts[0]};
      ring.insert(ring.end(), rest.begin(), rest.end());
      bool ok = true;
      long balance = 0;
      for (std::size_t j = 0; ok && j < ring.size(); ++j) {
        const int a = ring[j];
        const int b = ring[(j + 1) % ring.size()];
        if (!gamma.has_edge(a, b)) ok = false;
        else if (g.relation(a, b) == Relation::Forward) ++balance;
        else if (g.relation(a, b) == Relation::Backward) --balance;
      }
      if (!ok) continue;
      const long length = static_cast<long>(ring.size());
      const bool sign_ok = kind == MonographKind::First || length % 2 == 0;
      if (alpha.is_rational()) {
        // value rotation = balance*k/m + [second]*length/2, must be integral
        const long m = static_cast<long>(alpha.denominator());
        const long k = static_cast<long>(alpha.numerator());
        long num = 2 * balance * k + (kind == MonographKind::Second ? length * m : 0);
        if (((num % (2 * m)) + 2 * m) % (2 * m) != 0) return false;
      } else if (balance != 0 || !sign_ok) {
        return false;
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return true;
}

/// Rotations (in units of 1/den) reachable as h-values of closed walks at
/// `start` with at most `max_len` steps.
inline std::set<long> closed_walk_store(const MixedGraph& g, const UnitPhase& alpha, int start, int max_len) {
  const long den = static_cast<long>(alpha.denominator());
  const long k = static_cast<long>(alpha.numerator());
  std::set<std::pair<int, long>> frontier{{start, 0}};
  std::set<std::pair<int, long>> seen = frontier;
  std::set<long> store{0};
  for (int step = 0; step < max_len; ++step) {
    std::set<std::pair<int, long>> next;
    for (auto [u, rot] : frontier) {
      for (int v : g.neighbors(u)) {
        long r = rot;
        if (g.relation(u, v) == Relation::Forward) r += k;
        if (g.relation(u, v) == Relation::Backward) r -= k;
        r = ((r % den) + den) % den;
        if (v == start) store.insert(r);
        next.insert({v, r});
      }
    }
    frontier = next;
  }
  return store;
}

inline MixedGraph random_mixed_graph(int n, double edge_probability, std::mt19937_64& rng) {
  std::bernoulli_distribution present(edge_probability);
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!present(rng)) continue;
      switch (rng() % 3) {
        case 0: edges.push_back(Edge::digon(a, b)); break;
        case 1: edges.push_back(Edge::arc(a, b)); break;
        default: edges.push_back(Edge::arc(b, a)); break;
      }
    }
  }
  return MixedGraph(n, edges);
}

/// Uniformly random kind per pair from {none, digon, arc, reversed arc}.
inline MixedGraph uniform_mixed_graph(int n, std::mt19937_64& rng) {
  std::uint64_t index = 0;
  const int pairs = n * (n - 1) / 2;
  for (int p = 0; p < pairs; ++p) index |= (rng() % 4) << (2 * p);
  return graph_from_assignment(n, index);
}

inline MixedGraph random_mixed_tree(int n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    const int parent = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
    switch (rng() % 3) {
      case 0: edges.push_back(Edge::digon(parent, v)); break;
      case 1: edges.push_back(Edge::arc(parent, v)); break;
      default: edges.push_back(Edge::arc(v, parent)); break;
    }
  }
  return MixedGraph(n, edges);
}

/// Arcs only, between two random colour classes.
inline MixedGraph random_oriented_bipartite(int n, double edge_probability, std::mt19937_64& rng) {
  std::vector<int> side(static_cast<std::size_t>(n));
  for (auto& s : side) s = static_cast<int>(rng() % 2);
  std::bernoulli_distribution present(edge_probability);
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (side[a] == side[b] || !present(rng)) continue;
      edges.push_back(rng() % 2 ? Edge::arc(a, b) : Edge::arc(b, a));
    }
  }
  return MixedGraph(n, edges);
}

/// Random connected undirected graph: a random tree plus extra digons.
inline MixedGraph random_connected_digon_graph(int n, double extra_probability, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  std::vector<std::vector<bool>> used(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (int v = 1; v < n; ++v) {
    const int parent = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
    edges.push_back(Edge::digon(parent, v));
    used[parent][v] = used[v][parent] = true;
  }
  std::bernoulli_distribution extra(extra_probability);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!used[a][b] && extra(rng)) edges.push_back(Edge::digon(a, b));
  return MixedGraph(n, edges);
}

inline Spectrum sorted_desc(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return Spectrum{v};
}

}  // namespace mixedspec::testing

#endif  // MIXEDSPEC_TESTS_SUPPORT_HPP
