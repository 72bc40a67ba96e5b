// Acceptance checks: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "support.hpp"

using namespace mixedspec;
namespace mt = mixedspec::testing;

namespace {

const std::vector<UnitPhase> kCommon{UnitPhase::i(), UnitPhase::gamma(), UnitPhase::omega()};

template <typename F>
void each_small_graph(int max_n, F&& f) {
  for (int n = 1; n <= max_n; ++n)
    for (std::uint64_t idx = 0; idx < assignment_count(n); ++idx) f(graph_from_assignment(n, idx));
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

Outcome tree_spectra() {
  Outcome o;
  std::mt19937_64 rng(1001);
  const std::vector<UnitPhase> alphas{UnitPhase::i(), UnitPhase::gamma(), UnitPhase::omega(),
                                      UnitPhase::rational(1, 5), UnitPhase::angle(1.0)};
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const MixedGraph tree = mt::random_mixed_tree(1 + static_cast<int>(rng() % 10), rng);
    const Spectrum base = underlying_spectrum(tree);
    for (const auto& alpha : alphas) worst = std::max(worst, max_spectral_gap(spectrum_of(tree, alpha), base));
  }
  if (worst > 1e-9) o.fail("max gap " + std::to_string(worst));
  return o;
}

Outcome expansion_agreement() {
  Outcome o;
  auto check = [&](const MixedGraph& g) {
    for (const auto& alpha : kCommon) {
      const double gap = max_coefficient_gap(char_poly(build_hermitian(g, alpha)), char_poly_expansion(g, alpha));
      if (gap > 1e-8) o.fail(serialize_graph(g) + " gap " + std::to_string(gap));
    }
  };
  for (int n = 3; n <= 4; ++n)
    for (std::uint64_t idx = 0; idx < assignment_count(n); ++idx) check(graph_from_assignment(n, idx));
  std::mt19937_64 rng(1002);
  for (int trial = 0; trial < 2000; ++trial) check(mt::uniform_mixed_graph(6, rng));
  return o;
}

Outcome monograph_agreement() {
  Outcome o;
  each_small_graph(4, [&](const MixedGraph& g) {
    for (const auto& alpha : kCommon) {
      for (auto kind : {MonographKind::First, MonographKind::Second}) {
        if (is_monograph(g, alpha, kind).verdict != mt::brute_force_monograph(g, alpha, kind)) {
          o.fail(serialize_graph(g) + " alpha " + alpha.spec());
        }
      }
    }
  });
  return o;
}

Outcome first_kind_transfer() {
  Outcome o;
  int seen = 0;
  each_small_graph(4, [&](const MixedGraph& g) {
    for (const auto& alpha : kCommon) {
      if (!is_monograph(g, alpha, MonographKind::First).verdict) continue;
      ++seen;
      const auto basis = eigen_decomposition(build_hermitian(g, UnitPhase::one())).pairs;
      for (const auto& y : transfer_eigenvectors(g, alpha, basis)) {
        if (verify_eigenpair(g, alpha, y) > 1e-8) o.fail("residual on " + serialize_graph(g));
      }
      if (!spectra_equal(spectrum_of(g, alpha), underlying_spectrum(g), 1e-8)) o.fail("spectrum " + serialize_graph(g));
    }
  });
  if (seen == 0) o.fail("no monographs found");
  return o;
}

Outcome second_kind_negation() {
  Outcome o;
  each_small_graph(4, [&](const MixedGraph& g) {
    for (const auto& alpha : kCommon) {
      if (is_monograph(g, alpha, MonographKind::Second).verdict && !negated_spectrum_check(g, alpha, 1e-8)) {
        o.fail(serialize_graph(g) + " alpha " + alpha.spec());
      }
    }
  });
  const MixedGraph k4x = mt::load_fixture("k4x.mg");
  if (!is_monograph(k4x, UnitPhase::i(), MonographKind::Second).verdict) o.fail("K4X is not a second-kind monograph");
  if (max_spectral_gap(spectrum_of(k4x, UnitPhase::i()), Spectrum{{1, 1, 1, -3}}) > 1e-8) o.fail("K4X spectrum");
  return o;
}

Outcome radius_characterization() {
  Outcome o;
  auto check = [&](const MixedGraph& g) {
    if (!is_connected(g)) return;
    for (const auto& alpha : kCommon) {
      const RadiusAnalysis r = radius_equality_analysis(g, alpha);
      if (!r.theorem_consistent) o.fail("inconsistent " + serialize_graph(g) + " alpha " + alpha.spec());
      if (r.rho > r.delta + 1e-9) o.fail("rho above delta " + serialize_graph(g));
      if (alpha == UnitPhase::gamma() && r.equal && !r.mono1) o.fail("gamma equality without first kind");
    }
  };
  each_small_graph(4, check);
  std::mt19937_64 rng(1006);
  for (int count = 0; count < 2000;) {
    const MixedGraph g = mt::uniform_mixed_graph(5, rng);
    if (!is_connected(g)) continue;
    check(g);
    ++count;
  }
  return o;
}

Outcome gamma_omega_cospectral() {
  Outcome o;
  auto check = [&](const MixedGraph& g) {
    const auto report = numeric_cospectral(g, UnitPhase::gamma(), UnitPhase::omega());
    if (!report.cospectral || report.max_gap > 1e-8) o.fail(serialize_graph(g));
  };
  std::mt19937_64 rng(1007);
  for (int trial = 0; trial < 100; ++trial) check(mt::random_oriented_bipartite(2 + static_cast<int>(rng() % 7), 0.6, rng));
  each_small_graph(4, [&](const MixedGraph& g) {
    if (even_arc_condition(g)) check(g);
  });
  return o;
}

Outcome extension() {
  Outcome o;
  std::mt19937_64 rng(1008);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const MixedGraph base = mt::random_connected_digon_graph(n, 0.4, rng);
    // region: a BFS prefix from vertex 0
    const int size = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    std::vector<int> region{0};
    std::vector<bool> taken(static_cast<std::size_t>(n), false);
    taken[0] = true;
    for (std::size_t k = 0; k < region.size() && static_cast<int>(region.size()) < size; ++k) {
      for (int w : base.neighbors(region[k])) {
        if (!taken[w] && static_cast<int>(region.size()) < size) {
          taken[w] = true;
          region.push_back(w);
        }
      }
    }
    std::vector<Attachment> attachments(1 + rng() % 2);
    for (auto& a : attachments) {
      for (int v : region)
        if (rng() % 2) a.targets.push_back(v);
      if (a.targets.empty()) a.targets.push_back(region[rng() % region.size()]);
      a.direction = rng() % 2 ? AttachDirection::AllOut : AttachDirection::AllIn;
    }
    const UnitPhase& alpha = kCommon[trial % kCommon.size()];
    const MixedGraph out = extend_monograph(base, alpha, region, attachments);
    if (!mt::brute_force_monograph(out, alpha, MonographKind::First)) o.fail("not a monograph: " + serialize_graph(out));
    if (!spectra_equal(spectrum_of(out, alpha), underlying_spectrum(out), 1e-8)) o.fail("spectrum " + serialize_graph(out));
  }
  return o;
}

Outcome pinned_examples() {
  Outcome o;
  const MixedGraph dc3 = mt::load_fixture("dc3.mg");
  const MixedGraph t2 = mt::load_fixture("t2.mg");
  const double r3 = std::sqrt(3.0);
  if (max_spectral_gap(spectrum_of(dc3, UnitPhase::i()), Spectrum{{r3, 0, -r3}}) > 1e-10) o.fail("DC3 at i");
  if (max_spectral_gap(spectrum_of(dc3, UnitPhase::gamma()), Spectrum{{2, -1, -1}}) > 1e-10) o.fail("DC3 at gamma");
  if (max_coefficient_gap(char_poly(build_hermitian(dc3, UnitPhase::i())), CharPoly{{0, -3, 0}}) > 1e-10) {
    o.fail("DC3 char poly at i");
  }
  if (max_coefficient_gap(char_poly(build_hermitian(dc3, UnitPhase::gamma())), CharPoly{{0, -3, -2}}) > 1e-10) {
    o.fail("DC3 char poly at gamma");
  }
  if (is_monograph(dc3, UnitPhase::i(), MonographKind::First).verdict) o.fail("DC3 is an i-monograph");
  if (!is_monograph(dc3, UnitPhase::gamma(), MonographKind::First).verdict) o.fail("DC3 not a gamma-monograph");
  if (max_spectral_gap(spectrum_of(t2, UnitPhase::i()), Spectrum{{1, -1}}) > 1e-10) o.fail("T2 spectrum");
  if (max_coefficient_gap(char_poly_expansion(t2, UnitPhase::i()), CharPoly{{0, -1}}) > 1e-10) o.fail("T2 char poly");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"tree spectra are independent of alpha", tree_spectra},
      {"expansion formula matches trace recursion", expansion_agreement},
      {"gauge test matches brute-force cycle enumeration", monograph_agreement},
      {"first-kind monographs transfer eigenvectors", first_kind_transfer},
      {"second-kind monographs have negated spectra", second_kind_negation},
      {"spectral radius equality characterization", radius_characterization},
      {"gamma and omega cospectral under structural conditions", gamma_omega_cospectral},
      {"extensions of monographs stay monographs", extension},
      {"pinned DC3 and T2 values", pinned_examples},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %zu %s%s%s\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), o.ok ? "" : " -- ",
                o.detail.c_str());
    if (!o.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
