#ifndef MIXEDSPEC_COSPECTRAL_RULES_HPP
#define MIXEDSPEC_COSPECTRAL_RULES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <thread>
#include <variant>
#include <vector>

#include "mixedspec/errors.hpp"
#include "mixedspec/graph_core.hpp"
#include "mixedspec/monograph.hpp"
#include "mixedspec/phase.hpp"
#include "mixedspec/spectra.hpp"
#include "mixedspec/tolerance.hpp"

namespace mixedspec {

struct StructuralFlags {
  /// Every cycle has an even number of arcs.
  bool even_arc_condition = false;
  /// No digons and a bipartite underlying graph.
  bool oriented_bipartite = false;
  /// Acyclic underlying graph (trees and forests).
  bool tree = false;
  /// First-kind monograph for both phases.
  bool monograph_both = false;
};

struct CospectralReport {
  UnitPhase alpha1;
  UnitPhase alpha2;
  bool cospectral = false;
  /// Largest gap between the sorted spectra.
  double max_gap = 0.0;
  /// Largest gap between characteristic-polynomial coefficients.
  double coefficient_gap = 0.0;
  StructuralFlags structural_flags;
};

/// Every cycle carries an even number of arcs. Arc count and arc balance
/// agree mod 2 and both are additive over the cycle space, so the
/// fundamental cycles decide it.
inline bool even_arc_condition(const MixedGraph& g) {
  const FundamentalCycleBasis basis = fundamental_cycles(g);
  return std::all_of(basis.cycles.begin(), basis.cycles.end(),
                     [&](const Walk& c) { return arc_balance(g, c).balance % 2 == 0; });
}

inline bool oriented_bipartite(const MixedGraph& g) {
  const bool has_digon = std::any_of(g.edges().begin(), g.edges().end(),
                                     [](const Edge& e) { return e.kind == EdgeKind::Digon; });
  return !has_digon && bipartition(g).has_value();
}

inline bool is_gamma_omega_pair(const UnitPhase& a, const UnitPhase& b) {
  return (a == UnitPhase::gamma() && b == UnitPhase::omega()) ||
         (a == UnitPhase::omega() && b == UnitPhase::gamma());
}

/// Numeric α1-α2 cospectrality, decided on characteristic-polynomial
/// coefficients. Throws NumericalError if a structural sufficient condition
/// holds for this pair but the numbers disagree.
inline CospectralReport numeric_cospectral(const MixedGraph& g, const UnitPhase& alpha1, const UnitPhase& alpha2,
                                           double tol = tolerance::coefficient) {
  CospectralReport report{alpha1, alpha2};
  const HermitianMatrix h1 = build_hermitian(g, alpha1);
  const HermitianMatrix h2 = build_hermitian(g, alpha2);
  const Spectrum s1 = eigen_decomposition(h1).spectrum;
  const Spectrum s2 = eigen_decomposition(h2).spectrum;
  report.max_gap = max_spectral_gap(s1, s2);
  report.coefficient_gap = max_coefficient_gap(char_poly_checked(h1, s1), char_poly_checked(h2, s2));
  report.cospectral = report.coefficient_gap <= tol;

  auto& flags = report.structural_flags;
  flags.even_arc_condition = even_arc_condition(g);
  flags.oriented_bipartite = oriented_bipartite(g);
  flags.tree = is_forest(g);
  flags.monograph_both = is_monograph(g, alpha1, MonographKind::First).verdict &&
                         is_monograph(g, alpha2, MonographKind::First).verdict;

  const bool gamma_omega = is_gamma_omega_pair(alpha1, alpha2);
  const bool implied = flags.tree || flags.monograph_both ||
                       (gamma_omega && (flags.even_arc_condition || flags.oriented_bipartite));
  if (implied && !report.cospectral) {
    throw NumericalError("numeric_cospectral: structural condition holds but coefficients differ by " +
                         std::to_string(report.coefficient_gap));
  }
  return report;
}

/// Graph number `index` among the 4^{C(n,2)} mixed graphs on n vertices.
/// Pairs (i < j) are taken in lexicographic order, each a base-4 digit:
/// 0 none, 1 digon, 2 arc i -> j, 3 arc j -> i.
inline MixedGraph graph_from_assignment(int n, std::uint64_t index) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      switch (index % 4) {
        case 1: edges.push_back(Edge::digon(i, j)); break;
        case 2: edges.push_back(Edge::arc(i, j)); break;
        case 3: edges.push_back(Edge::arc(j, i)); break;
        default: break;
      }
      index /= 4;
    }
  }
  return MixedGraph(n, std::move(edges));
}

inline std::uint64_t assignment_count(int n) {
  const int pairs = n * (n - 1) / 2;
  return std::uint64_t{1} << (2 * pairs);
}

struct Exhaustive {};
struct RandomSample {
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
};
using SearchMode = std::variant<Exhaustive, RandomSample>;

inline constexpr int kExhaustiveMaxOrder = 5;

struct CospectralHit {
  /// Assignment index (exhaustive) or sample number (random).
  std::uint64_t index = 0;
  MixedGraph graph;
  CospectralReport report;
};

/// Streams cospectral hits in index order. Work is split into disjoint index
/// ranges evaluated on worker threads; results are emitted in order.
inline void search_cospectral(int n, const UnitPhase& alpha1, const UnitPhase& alpha2, const SearchMode& mode,
                              const std::function<void(const CospectralHit&)>& emit,
                              double tol = tolerance::coefficient) {
  if (n < 1) throw PreconditionError("search_cospectral: n must be positive");
  std::vector<std::uint64_t> assignments;
  std::uint64_t total = 0;
  if (std::holds_alternative<Exhaustive>(mode)) {
    if (n > kExhaustiveMaxOrder) {
      throw PreconditionError("search_cospectral: exhaustive mode is limited to n <= " +
                              std::to_string(kExhaustiveMaxOrder));
    }
    total = assignment_count(n);
  } else {
    if (n > 8) throw PreconditionError("search_cospectral: random mode is limited to n <= 8");
    const auto& sample = std::get<RandomSample>(mode);
    std::mt19937_64 rng(sample.seed);
    const int pairs = n * (n - 1) / 2;
    assignments.reserve(sample.count);
    for (std::uint64_t s = 0; s < sample.count; ++s) {
      std::uint64_t index = 0;
      for (int p = 0; p < pairs; ++p) index |= (rng() % 4) << (2 * p);
      assignments.push_back(index);
    }
    total = sample.count;
  }
  auto assignment_at = [&](std::uint64_t k) { return assignments.empty() ? k : assignments[k]; };

  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t block = 4096;
  for (std::uint64_t begin = 0; begin < total; begin += block * workers) {
    std::vector<std::vector<CospectralHit>> found(workers);
    std::vector<std::exception_ptr> failures(workers);
    auto run = [&](unsigned w) {
      try {
        const std::uint64_t lo = begin + w * block;
        const std::uint64_t hi = std::min(total, lo + block);
        for (std::uint64_t k = lo; k < hi; ++k) {
          MixedGraph g = graph_from_assignment(n, assignment_at(k));
          CospectralReport r = numeric_cospectral(g, alpha1, alpha2, tol);
          if (r.cospectral) found[w].push_back({k, std::move(g), std::move(r)});
        }
      } catch (...) {
        failures[w] = std::current_exception();
      }
    };
    if (workers == 1) {
      run(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }
    for (unsigned w = 0; w < workers; ++w) {
      if (failures[w]) std::rethrow_exception(failures[w]);
      for (const auto& hit : found[w]) emit(hit);
    }
  }
}

inline std::vector<CospectralHit> search_cospectral(int n, const UnitPhase& alpha1, const UnitPhase& alpha2,
                                                    const SearchMode& mode, double tol = tolerance::coefficient) {
  std::vector<CospectralHit> hits;
  search_cospectral(n, alpha1, alpha2, mode, [&](const CospectralHit& h) { hits.push_back(h); }, tol);
  return hits;
}

}  // namespace mixedspec

#endif  // MIXEDSPEC_COSPECTRAL_RULES_HPP
