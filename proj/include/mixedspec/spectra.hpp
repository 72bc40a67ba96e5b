#ifndef MIXEDSPEC_SPECTRA_HPP
#define MIXEDSPEC_SPECTRA_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mixedspec/errors.hpp"
#include "mixedspec/graph_core.hpp"
#include "mixedspec/phase.hpp"
#include "mixedspec/tolerance.hpp"

namespace mixedspec {

using ComplexVector = Eigen::VectorXcd;

/// Dense H^α: zero diagonal, unit-modulus entries on edges, h_vu = conj(h_uv).
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {}

  int order() const { return static_cast<int>(entries_.rows()); }
  std::complex<double> operator()(int u, int v) const { return entries_(u, v); }
  const Eigen::MatrixXcd& matrix() const { return entries_; }

 private:
  Eigen::MatrixXcd entries_;
};

/// Real eigenvalues, sorted descending.
struct Spectrum {
  std::vector<double> eigenvalues;

  std::size_t size() const { return eigenvalues.size(); }
};

/// Coefficients c_1..c_n of λ^n + c_1 λ^{n-1} + ... + c_n.
struct CharPoly {
  std::vector<double> coefficients;

  std::size_t degree() const { return coefficients.size(); }
};

struct EigenPair {
  double lambda = 0.0;
  ComplexVector vector;
};

struct EigenDecomposition {
  Spectrum spectrum;
  /// Orthonormal eigenvectors in the order of spectrum.eigenvalues.
  std::vector<EigenPair> pairs;
};

inline HermitianMatrix build_hermitian(const MixedGraph& g, const UnitPhase& alpha) {
  const int n = g.order();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
  const std::complex<double> a = alpha.value();
  for (const Edge& e : g.edges()) {
    if (e.kind == EdgeKind::Digon) {
      h(e.u, e.v) = h(e.v, e.u) = 1.0;
    } else {
      h(e.u, e.v) = a;
      h(e.v, e.u) = std::conj(a);
    }
  }
  return HermitianMatrix(std::move(h));
}

/// Eigenvalues and an orthonormal eigenbasis of a Hermitian matrix.
///
/// H = X + iY is embedded as the real symmetric [[X, -Y], [Y, X]], whose
/// spectrum is that of H with every multiplicity doubled. A 2k-fold cluster of
/// the embedded problem maps, via (u; w) -> u + iw, onto a k-dimensional
/// complex eigenspace; k orthonormal vectors are extracted from it by pivoted
/// Gram-Schmidt.
inline EigenDecomposition eigen_decomposition(const HermitianMatrix& h) {
  const int n = h.order();
  EigenDecomposition out;
  if (n == 0) return out;

  const Eigen::MatrixXd x = h.matrix().real();
  const Eigen::MatrixXd y = h.matrix().imag();
  Eigen::MatrixXd embedded(2 * n, 2 * n);
  embedded << x, -y, y, x;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(embedded);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigen_decomposition: symmetric solver did not converge");
  }
  // Descending order.
  const Eigen::VectorXd values = solver.eigenvalues().reverse();
  const Eigen::MatrixXd vectors = solver.eigenvectors().rowwise().reverse();

  const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
  const double cluster_gap = 1e-7 * scale;

  int start = 0;
  while (start < 2 * n) {
    int end = start + 1;
    while (end < 2 * n && values(end - 1) - values(end) <= cluster_gap) ++end;
    const int size = end - start;
    if (size % 2 != 0) {
      throw NumericalError("eigen_decomposition: embedded multiplicity is not even");
    }

    std::vector<ComplexVector> candidates;
    for (int j = start; j < end; ++j) {
      ComplexVector z(n);
      for (int r = 0; r < n; ++r) z(r) = {vectors(r, j), vectors(r + n, j)};
      candidates.push_back(z.normalized());
    }
    for (int pick = 0; pick < size / 2; ++pick) {
      auto best = std::max_element(candidates.begin(), candidates.end(),
                                   [](const auto& a, const auto& b) { return a.norm() < b.norm(); });
      if (best->norm() < 1e-3) {
        throw NumericalError("eigen_decomposition: could not recover a complex eigenbasis");
      }
      ComplexVector chosen = best->normalized();
      for (auto& c : candidates) c -= chosen * chosen.dot(c);
      out.pairs.push_back({values(start + 2 * pick), std::move(chosen)});
      out.spectrum.eigenvalues.push_back(values(start + 2 * pick));
    }
    start = end;
  }

  const double bound = tolerance::eigen_residual_per_vertex * n * scale;
  for (const auto& p : out.pairs) {
    const double residual = (h.matrix() * p.vector - p.lambda * p.vector).cwiseAbs().maxCoeff();
    if (residual > bound) {
      throw NumericalError("eigen_decomposition: residual " + std::to_string(residual) +
                           " exceeds bound");
    }
  }
  return out;
}

inline Spectrum spectrum_of(const MixedGraph& g, const UnitPhase& alpha) {
  return eigen_decomposition(build_hermitian(g, alpha)).spectrum;
}

/// σ(Γ(D)): the α = 1 spectrum.
inline Spectrum underlying_spectrum(const MixedGraph& g) { return spectrum_of(g, UnitPhase::one()); }

namespace detail {

inline CharPoly truncate_to_real(const std::vector<std::complex<double>>& coeffs) {
  CharPoly p;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const auto c = coeffs[k];
    if (std::abs(c.imag()) > tolerance::coefficient * std::max(1.0, std::abs(c))) {
      throw NumericalError("char_poly: coefficient c_" + std::to_string(k + 1) +
                           " has imaginary residue " + std::to_string(c.imag()));
    }
    p.coefficients.push_back(c.real() == 0.0 ? 0.0 : c.real());
  }
  return p;
}

}  // namespace detail

/// Faddeev-LeVerrier: M_k = H M_{k-1} + c_{k-1} I, c_k = -tr(H M_k) / k.
inline CharPoly char_poly(const HermitianMatrix& h) {
  const int n = h.order();
  const Eigen::MatrixXcd& a = h.matrix();
  std::vector<std::complex<double>> coeffs;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  std::complex<double> previous = 1.0;
  for (int k = 1; k <= n; ++k) {
    m = a * m;
    m.diagonal().array() += previous;
    previous = -(a * m).trace() / static_cast<double>(k);
    coeffs.push_back(previous);
  }
  return detail::truncate_to_real(coeffs);
}

/// Expands ∏(λ - λ_i).
inline CharPoly char_poly_from_spectrum(const Spectrum& s) {
  std::vector<long double> poly{1.0L};
  for (double root : s.eigenvalues) {
    poly.push_back(0.0L);
    for (std::size_t k = poly.size() - 1; k > 0; --k) poly[k] -= root * poly[k - 1];
  }
  CharPoly p;
  for (std::size_t k = 1; k < poly.size(); ++k) p.coefficients.push_back(static_cast<double>(poly[k]));
  return p;
}

inline double max_coefficient_gap(const CharPoly& a, const CharPoly& b) {
  if (a.degree() != b.degree()) throw PreconditionError("characteristic polynomials differ in degree");
  double gap = 0.0;
  for (std::size_t k = 0; k < a.degree(); ++k) {
    gap = std::max(gap, std::abs(a.coefficients[k] - b.coefficients[k]));
  }
  return gap;
}

/// Trace-recursion coefficients, cross-checked against the product over the
/// spectrum. Throws NumericalError when the two routes disagree.
inline CharPoly char_poly_checked(const HermitianMatrix& h, const Spectrum& s) {
  CharPoly trace_route = char_poly(h);
  const CharPoly root_route = char_poly_from_spectrum(s);
  for (std::size_t k = 0; k < trace_route.degree(); ++k) {
    const double c = trace_route.coefficients[k];
    if (std::abs(c - root_route.coefficients[k]) > tolerance::coefficient * std::max(1.0, std::abs(c))) {
      throw NumericalError("char_poly: trace recursion and eigenvalue product disagree at c_" +
                           std::to_string(k + 1));
    }
  }
  return trace_route;
}

inline double spectral_radius(const Spectrum& s) {
  double rho = 0.0;
  for (double v : s.eigenvalues) rho = std::max(rho, std::abs(v));
  return rho;
}

/// ρ_α(D): largest |λ| over σ_α(D).
inline double spectral_radius(const MixedGraph& g, const UnitPhase& alpha) {
  return spectral_radius(spectrum_of(g, alpha));
}

inline double max_spectral_gap(const Spectrum& a, const Spectrum& b) {
  if (a.size() != b.size()) throw PreconditionError("spectra differ in cardinality");
  auto x = a.eigenvalues;
  auto y = b.eigenvalues;
  std::sort(x.begin(), x.end(), std::greater<>());
  std::sort(y.begin(), y.end(), std::greater<>());
  double gap = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) gap = std::max(gap, std::abs(x[k] - y[k]));
  return gap;
}

inline bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol = tolerance::spectra) {
  return max_spectral_gap(a, b) <= tol;
}

/// Largest violation of the summation rule
/// λ x(u) = Σ_{u~v} x(v) + α Σ_{u->v} x(v) + conj(α) Σ_{u<-v} x(v).
inline double verify_eigenpair(const MixedGraph& g, const UnitPhase& alpha, const EigenPair& p) {
  if (p.vector.size() != g.order()) throw PreconditionError("eigenvector length differs from vertex count");
  const std::complex<double> a = alpha.value();
  double worst = 0.0;
  for (int u = 0; u < g.order(); ++u) {
    std::complex<double> digons = 0.0, out = 0.0, in = 0.0;
    for (int v : g.neighbors(u)) {
      switch (g.relation(u, v)) {
        case Relation::Digon: digons += p.vector(v); break;
        case Relation::Forward: out += p.vector(v); break;
        case Relation::Backward: in += p.vector(v); break;
        case Relation::None: break;
      }
    }
    const auto rhs = digons + a * out + std::conj(a) * in;
    worst = std::max(worst, std::abs(p.lambda * p.vector(u) - rhs));
  }
  return worst;
}

}  // namespace mixedspec

#endif  // MIXEDSPEC_SPECTRA_HPP
