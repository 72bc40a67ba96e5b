#ifndef MIXEDSPEC_MONOGRAPH_HPP
#define MIXEDSPEC_MONOGRAPH_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mixedspec/errors.hpp"
#include "mixedspec/graph_core.hpp"
#include "mixedspec/phase.hpp"
#include "mixedspec/spectra.hpp"
#include "mixedspec/tolerance.hpp"

namespace mixedspec {

/// First kind tracks h-values; second kind tracks g-values, which flip sign
/// on every step.
enum class MonographKind { First = 1, Second = 2 };

inline Phase walk_value(const MixedGraph& g, const UnitPhase& alpha, const Walk& w, MonographKind kind) {
  return kind == MonographKind::First ? walk_value_h(g, alpha, w) : walk_value_g(g, alpha, w);
}

/// The store S^α(u) of a connected graph: the subgroup of the circle
/// generated by the values of the fundamental cycles.
struct StoreDescriptor {
  MonographKind kind = MonographKind::First;
  /// Value of each fundamental cycle, in basis order.
  std::vector<Phase> generator_phases;
  /// Generating rotation q of the cyclic subgroup {m·q}; absent when the
  /// subgroup is not finite (an infinite-order α with an unbalanced cycle).
  std::optional<Phase> step;
  /// |S^α(u)| when finite.
  std::optional<std::int64_t> size;

  /// Every store element, when finite.
  std::vector<Phase> elements() const {
    std::vector<Phase> out;
    if (!step || !size) return out;
    Phase p;
    for (std::int64_t m = 0; m < *size; ++m, p *= *step) out.push_back(p);
    return out;
  }
};

struct MonographCertificate {
  bool verdict = false;
  /// Gauge: value of the walk from the component root to each vertex.
  /// Filled when verdict is true.
  std::vector<Phase> potential;
  /// A fundamental cycle whose value is not 1. Filled when verdict is false.
  std::optional<Walk> violation;
};

struct PartitionClass {
  Phase key;
  std::vector<int> vertices;
};

struct MonographPartition {
  /// Classes ordered by the rotation of their key.
  std::vector<PartitionClass> classes;
};

namespace detail {

/// True when the cycle value is the identity. Infinite-order α: only
/// balanced cycles qualify, decided on exact integers.
inline bool cycle_is_trivial(const MixedGraph& g, const UnitPhase& alpha, const Walk& c, MonographKind kind) {
  if (alpha.is_rational()) return walk_value(g, alpha, c, kind).is_identity();
  const ArcBalance b = arc_balance(g, c);
  return b.balance == 0 && (kind == MonographKind::First || b.length % 2 == 0);
}

inline Phase step_phase(const MixedGraph& g, const UnitPhase& alpha, int from, int to, MonographKind kind) {
  Phase p = entry_phase(g, alpha, from, to);
  return kind == MonographKind::First ? p : p * Phase::minus_one();
}

/// Potentials along the BFS forest: the root of each component gets 1 and
/// a step u -> v multiplies by h_{uv} (negated for the second kind).
inline std::vector<Phase> forest_potential(const MixedGraph& g, const UnitPhase& alpha,
                                           const FundamentalCycleBasis& basis, MonographKind kind) {
  std::vector<Phase> potential(static_cast<std::size_t>(g.order()));
  for (int v : basis.bfs_order) {
    const int parent = basis.parent[v];
    if (parent >= 0) potential[v] = potential[parent] * step_phase(g, alpha, parent, v, kind);
  }
  return potential;
}

}  // namespace detail

/// Store of a connected graph, computed from fundamental-cycle values.
inline StoreDescriptor compute_store(const MixedGraph& g, const UnitPhase& alpha, MonographKind kind) {
  if (!is_connected(g)) throw PreconditionError("compute_store: graph is not connected");
  const FundamentalCycleBasis basis = fundamental_cycles(g);
  StoreDescriptor store;
  store.kind = kind;
  for (const Walk& c : basis.cycles) store.generator_phases.push_back(walk_value(g, alpha, c, kind));

  if (alpha.is_rational()) {
    // Subgroup of Q/Z generated by num_j/den_j is cyclic with step gcd/L.
    std::int64_t common = 1;
    for (const Phase& p : store.generator_phases) common = std::lcm(common, p.denominator());
    std::int64_t g_num = common;
    for (const Phase& p : store.generator_phases) {
      g_num = std::gcd(g_num, p.numerator() * (common / p.denominator()));
    }
    store.step = Phase::exact(g_num, common);
    store.size = common / g_num;
    return store;
  }

  bool balanced = true;
  bool odd = false;
  for (const Walk& c : basis.cycles) {
    const ArcBalance b = arc_balance(g, c);
    balanced = balanced && b.balance == 0;
    odd = odd || b.length % 2 == 1;
  }
  if (balanced) {
    const bool sign_flip = kind == MonographKind::Second && odd;
    store.step = sign_flip ? Phase::minus_one() : Phase::identity();
    store.size = sign_flip ? 2 : 1;
  }
  return store;
}

/// Decides the monograph property per component via the store criterion:
/// the graph is a monograph iff every fundamental cycle has value 1.
inline MonographCertificate is_monograph(const MixedGraph& g, const UnitPhase& alpha, MonographKind kind) {
  const FundamentalCycleBasis basis = fundamental_cycles(g);
  MonographCertificate cert;
  for (const Walk& c : basis.cycles) {
    if (!detail::cycle_is_trivial(g, alpha, c, kind)) {
      cert.violation = c;
      return cert;
    }
  }
  cert.verdict = true;
  cert.potential = detail::forest_potential(g, alpha, basis, kind);
  return cert;
}

/// Groups vertices by gauge potential.
///
/// Convention: a forward arc multiplies the potential by α, so arcs run from
/// the class keyed p to the class keyed α·p (the opposite labelling j -> -j
/// also describes the same partition). Digons stay inside a class. For the
/// second kind every step additionally multiplies by -1: digons join p and
/// -p, forward arcs join p and -α·p.
inline MonographPartition monograph_partition(const MixedGraph& g, const UnitPhase& alpha, MonographKind kind) {
  const MonographCertificate cert = is_monograph(g, alpha, kind);
  if (!cert.verdict) {
    throw PreconditionError(std::string("not an alpha-monograph of ") +
                            (kind == MonographKind::First ? "first" : "second") + " kind");
  }
  MonographPartition partition;
  for (int v = 0; v < g.order(); ++v) {
    auto it = std::find_if(partition.classes.begin(), partition.classes.end(),
                           [&](const PartitionClass& c) { return c.key == cert.potential[v]; });
    if (it == partition.classes.end()) {
      partition.classes.push_back({cert.potential[v], {v}});
    } else {
      it->vertices.push_back(v);
    }
  }
  std::sort(partition.classes.begin(), partition.classes.end(),
            [](const PartitionClass& a, const PartitionClass& b) { return a.key.rotation() < b.key.rotation(); });
  return partition;
}

/// Checks every edge against the class-transition rules documented on
/// monograph_partition.
inline bool partition_respects_edges(const MixedGraph& g, const UnitPhase& alpha, MonographKind kind,
                                     const MonographPartition& partition) {
  std::vector<std::optional<Phase>> key(static_cast<std::size_t>(g.order()));
  for (const auto& c : partition.classes) {
    for (int v : c.vertices) {
      if (v < 0 || v >= g.order() || key[v]) return false;
      key[v] = c.key;
    }
  }
  if (std::any_of(key.begin(), key.end(), [](const auto& k) { return !k.has_value(); })) return false;
  for (const Edge& e : g.edges()) {
    if (!(*key[e.v] == *key[e.u] * detail::step_phase(g, alpha, e.u, e.v, kind))) return false;
  }
  return true;
}

/// Turns eigenpairs of Γ(D) into eigenpairs of H^α(D) for a first-kind
/// monograph: y_r = conj(p(r)) · x_r with p the gauge potential.
inline std::vector<EigenPair> transfer_eigenvectors(const MixedGraph& g, const UnitPhase& alpha,
                                                    const std::vector<EigenPair>& basis) {
  const MonographCertificate cert = is_monograph(g, alpha, MonographKind::First);
  if (!cert.verdict) throw PreconditionError("transfer_eigenvectors: not a first-kind alpha-monograph");
  for (const auto& pair : basis) {
    if (verify_eigenpair(g, UnitPhase::one(), pair) > tolerance::transfer_residual) {
      throw PreconditionError("transfer_eigenvectors: basis vector is not an eigenvector of the underlying graph");
    }
  }
  std::vector<EigenPair> out;
  out.reserve(basis.size());
  for (const auto& pair : basis) {
    EigenPair y{pair.lambda, pair.vector};
    for (int r = 0; r < g.order(); ++r) y.vector(r) *= std::conj(cert.potential[r].value());
    const double residual = verify_eigenpair(g, alpha, y);
    if (residual > tolerance::transfer_residual) {
      throw NumericalError("transfer_eigenvectors: residual " + std::to_string(residual));
    }
    out.push_back(std::move(y));
  }
  return out;
}

/// σ_α(D) == -σ(Γ(D)) for a second-kind monograph.
inline bool negated_spectrum_check(const MixedGraph& g, const UnitPhase& alpha, double tol = tolerance::spectra) {
  if (!is_monograph(g, alpha, MonographKind::Second).verdict) {
    throw PreconditionError("negated_spectrum_check: not a second-kind alpha-monograph");
  }
  Spectrum negated = underlying_spectrum(g);
  for (double& v : negated.eigenvalues) v = -v;
  return spectra_equal(spectrum_of(g, alpha), negated, tol);
}

enum class AttachDirection { AllOut, AllIn };

/// A new vertex joined to `targets`: AllOut gives arcs x -> t (N+(x) =
/// targets), AllIn gives arcs t -> x (N-(x) = targets).
struct Attachment {
  std::vector<int> targets;
  AttachDirection direction = AttachDirection::AllOut;
};

/// Adds one vertex per attachment to a first-kind monograph. `region` must
/// span a connected subgraph made of digons only.
inline MixedGraph extend_monograph(const MixedGraph& g, const UnitPhase& alpha, const std::vector<int>& region,
                                   const std::vector<Attachment>& attachments) {
  const int n = g.order();
  if (region.empty()) throw PreconditionError("extend_monograph: region is empty");
  std::vector<bool> in_region(static_cast<std::size_t>(n), false);
  for (int v : region) {
    if (v < 0 || v >= n) throw PreconditionError("extend_monograph: region vertex out of range");
    if (in_region[v]) throw PreconditionError("extend_monograph: region lists a vertex twice");
    in_region[v] = true;
  }
  for (const Edge& e : g.edges()) {
    if (in_region[e.u] && in_region[e.v] && e.kind != EdgeKind::Digon) {
      throw PreconditionError("extend_monograph: region contains the arc " + std::to_string(e.u) + " -> " +
                              std::to_string(e.v));
    }
  }
  std::vector<int> reached{region.front()};
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  seen[region.front()] = true;
  for (std::size_t k = 0; k < reached.size(); ++k) {
    for (int w : g.neighbors(reached[k])) {
      if (in_region[w] && !seen[w]) {
        seen[w] = true;
        reached.push_back(w);
      }
    }
  }
  if (reached.size() != region.size()) throw PreconditionError("extend_monograph: region is not connected");
  if (!is_monograph(g, alpha, MonographKind::First).verdict) {
    throw PreconditionError("extend_monograph: graph is not a first-kind alpha-monograph");
  }

  std::vector<Edge> edges = g.edges();
  for (std::size_t k = 0; k < attachments.size(); ++k) {
    const auto& a = attachments[k];
    if (a.targets.empty()) throw PreconditionError("extend_monograph: attachment has no targets");
    const int x = n + static_cast<int>(k);
    for (int t : a.targets) {
      if (t < 0 || t >= n || !in_region[t]) {
        throw PreconditionError("extend_monograph: attachment target " + std::to_string(t) + " is outside the region");
      }
      edges.push_back(a.direction == AttachDirection::AllOut ? Edge::arc(x, t) : Edge::arc(t, x));
    }
  }
  MixedGraph out(n + static_cast<int>(attachments.size()), std::move(edges));
  if (!is_monograph(out, alpha, MonographKind::First).verdict) {
    throw std::logic_error("extend_monograph: extension is not a monograph");
  }
  return out;
}

struct RadiusAnalysis {
  double rho = 0.0;
  int delta = 0;
  bool equal = false;
  bool regular = false;
  bool mono1 = false;
  bool mono2 = false;
  /// No k, l with α^k = -α^l, i.e. -1 is not a power of α.
  bool minus_one_excluded = false;
  bool theorem_consistent = false;
};

/// -1 lies in the group generated by α only for rational α of even order.
inline bool minus_one_excluded(const UnitPhase& alpha) {
  return !alpha.is_rational() || alpha.denominator() % 2 == 1;
}

/// Compares ρ_α(D) with Δ and checks it against the regular-monograph
/// characterization of equality.
inline RadiusAnalysis radius_equality_analysis(const MixedGraph& g, const UnitPhase& alpha) {
  if (!is_connected(g)) throw PreconditionError("radius_equality_analysis: graph is not connected");
  const DegreeProfile degrees = degree_profile(g);
  RadiusAnalysis r;
  r.rho = spectral_radius(g, alpha);
  r.delta = degrees.max_degree;
  r.equal = std::abs(r.rho - r.delta) <= tolerance::spectra;
  r.regular = degrees.regular;
  r.mono1 = is_monograph(g, alpha, MonographKind::First).verdict;
  r.mono2 = is_monograph(g, alpha, MonographKind::Second).verdict;
  r.minus_one_excluded = minus_one_excluded(alpha);
  r.theorem_consistent = r.equal == (r.regular && (r.mono1 || r.mono2));
  if (r.minus_one_excluded && r.equal && !r.mono1) r.theorem_consistent = false;
  return r;
}

/// Monograph for every α: every cycle is balanced, checked on a cycle basis.
inline bool every_alpha_monograph(const MixedGraph& g) {
  const FundamentalCycleBasis basis = fundamental_cycles(g);
  return std::all_of(basis.cycles.begin(), basis.cycles.end(),
                     [&](const Walk& c) { return arc_balance(g, c).balance == 0; });
}

}  // namespace mixedspec

#endif  // MIXEDSPEC_MONOGRAPH_HPP
