#ifndef MIXEDSPEC_PHASE_HPP
#define MIXEDSPEC_PHASE_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>

#include "mixedspec/errors.hpp"
#include "mixedspec/graph_core.hpp"
#include "mixedspec/tolerance.hpp"

namespace mixedspec {

/// A point on the unit circle stored as a rotation in turns (value =
/// e^{2πi·rotation}). Exact phases keep the rotation as a reduced fraction
/// num/den with 0 <= num < den; inexact ones keep a double in [0, 1).
class Phase {
 public:
  Phase() = default;

  static Phase exact(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw InputError("phase denominator must be positive");
    num %= den;
    if (num < 0) num += den;
    const auto g = std::gcd(num, den);
    Phase p;
    p.num_ = num / g;
    p.den_ = den / g;
    return p;
  }

  static Phase turns(double t) {
    Phase p;
    p.exact_ = false;
    p.turns_ = wrap(t);
    return p;
  }

  static Phase identity() { return {}; }
  static Phase minus_one() { return exact(1, 2); }

  bool is_exact() const { return exact_; }
  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  /// Rotation in turns, in [0, 1).
  double rotation() const {
    return exact_ ? static_cast<double>(num_) / static_cast<double>(den_) : turns_;
  }
  long double rotation_ld() const {
    return exact_ ? static_cast<long double>(num_) / static_cast<long double>(den_)
                  : static_cast<long double>(turns_);
  }

  std::complex<double> value() const {
    if (exact_) {
      // Quarter turns are returned without rounding noise.
      if (num_ == 0) return {1.0, 0.0};
      if (4 * num_ == den_) return {0.0, 1.0};
      if (2 * num_ == den_) return {-1.0, 0.0};
      if (4 * num_ == 3 * den_) return {0.0, -1.0};
    }
    const double angle = 2.0 * std::numbers::pi * rotation();
    return {std::cos(angle), std::sin(angle)};
  }

  /// Re(value) evaluated in extended precision.
  long double real_part() const {
    if (exact_ && num_ == 0) return 1.0L;
    if (exact_ && 2 * num_ == den_) return -1.0L;
    if (exact_ && (4 * num_ == den_ || 4 * num_ == 3 * den_)) return 0.0L;
    return std::cos(2.0L * std::numbers::pi_v<long double> * rotation_ld());
  }

  Phase conj() const {
    return exact_ ? exact(-num_, den_) : turns(-turns_);
  }

  Phase pow(std::int64_t m) const {
    if (exact_) {
      // num_ * m can overflow only for absurd exponents; reduce m first.
      return exact((num_ * (m % den_)) % den_, den_);
    }
    return turns(turns_ * static_cast<double>(m));
  }

  friend Phase operator*(const Phase& a, const Phase& b) {
    if (a.exact_ && b.exact_) {
      const auto l = std::lcm(a.den_, b.den_);
      return exact(a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l);
    }
    return turns(a.rotation() + b.rotation());
  }
  Phase& operator*=(const Phase& other) { return *this = *this * other; }

  /// Exact comparison when both sides are exact; otherwise circular
  /// distance below tolerance::phase.
  friend bool operator==(const Phase& a, const Phase& b) {
    if (a.exact_ && b.exact_) return a.num_ == b.num_ && a.den_ == b.den_;
    const double d = std::abs(a.rotation() - b.rotation());
    return std::min(d, 1.0 - d) <= tolerance::phase;
  }

  bool is_identity() const { return *this == identity(); }

  /// "k/n" of a full turn for exact phases, a decimal turn count otherwise.
  std::string to_string() const {
    if (exact_) return std::to_string(num_) + "/" + std::to_string(den_);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", turns_);
    return buf;
  }

 private:
  static double wrap(double t) {
    double r = t - std::floor(t);
    return r >= 1.0 ? 0.0 : r;
  }

  bool exact_ = true;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  double turns_ = 0.0;
};

/// The unit complex number α. Rational(k, n) is e^{2πik/n}, gcd-reduced
/// with 0 <= k < n; Angle(θ) is e^{iθ} and is treated as having infinite
/// order.
class UnitPhase {
 public:
  enum class Kind { Rational, Angle };

  static UnitPhase rational(std::int64_t k, std::int64_t n) {
    if (n <= 0) throw InputError("root of unity needs a positive denominator");
    UnitPhase a;
    a.phase_ = Phase::exact(k, n);
    return a;
  }

  static UnitPhase angle(double theta) {
    if (!std::isfinite(theta)) throw InputError("angle must be finite");
    UnitPhase a;
    a.kind_ = Kind::Angle;
    a.theta_ = theta;
    a.phase_ = Phase::turns(theta / (2.0 * std::numbers::pi));
    return a;
  }

  static UnitPhase i() { return rational(1, 4); }
  static UnitPhase gamma() { return rational(1, 3); }
  static UnitPhase omega() { return rational(1, 6); }
  static UnitPhase one() { return rational(0, 1); }

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  /// k of Rational(k, n).
  std::int64_t numerator() const { return phase_.numerator(); }
  /// n of Rational(k, n).
  std::int64_t denominator() const { return phase_.denominator(); }
  double theta() const {
    return is_rational() ? 2.0 * std::numbers::pi * phase_.rotation() : theta_;
  }

  const Phase& phase() const { return phase_; }
  Phase pow(std::int64_t m) const { return phase_.pow(m); }
  std::complex<double> value() const { return phase_.value(); }

  /// Canonical spec string accepted by make_alpha.
  std::string spec() const {
    if (!is_rational()) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "angle:%.17g", theta_);
      return buf;
    }
    if (*this == i()) return "i";
    if (*this == gamma()) return "gamma";
    if (*this == omega()) return "omega";
    if (*this == one()) return "1";
    return "root:" + std::to_string(numerator()) + "/" + std::to_string(denominator());
  }

  friend bool operator==(const UnitPhase& a, const UnitPhase& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.is_rational()) return a.phase_ == b.phase_;
    return a.theta_ == b.theta_;
  }

 private:
  Kind kind_ = Kind::Rational;
  double theta_ = 0.0;
  Phase phase_;
};

/// Parses `i`, `gamma`, `omega`, `1`, `root:k/n` or `angle:<radians>`.
inline UnitPhase make_alpha(std::string_view spec) {
  if (spec == "i") return UnitPhase::i();
  if (spec == "gamma" || spec == "γ") return UnitPhase::gamma();
  if (spec == "omega" || spec == "ω") return UnitPhase::omega();
  if (spec == "1") return UnitPhase::one();

  auto bad = [&] { return InputError("unparsable alpha spec '" + std::string(spec) + "'"); };
  if (spec.starts_with("root:")) {
    const auto body = spec.substr(5);
    const auto slash = body.find('/');
    if (slash == std::string_view::npos) throw bad();
    std::int64_t k = 0, n = 0;
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    auto r1 = std::from_chars(num.data(), num.data() + num.size(), k);
    auto r2 = std::from_chars(den.data(), den.data() + den.size(), n);
    if (num.empty() || den.empty() || r1.ec != std::errc{} || r1.ptr != num.data() + num.size() ||
        r2.ec != std::errc{} || r2.ptr != den.data() + den.size()) {
      throw bad();
    }
    if (n == 0) throw InputError("alpha spec '" + std::string(spec) + "': denominator is zero");
    if (n < 0) throw bad();
    return UnitPhase::rational(k, n);
  }
  if (spec.starts_with("angle:")) {
    const std::string body(spec.substr(6));
    std::size_t used = 0;
    double theta = 0.0;
    try {
      theta = std::stod(body, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != body.size() || !std::isfinite(theta)) throw bad();
    return UnitPhase::angle(theta);
  }
  throw bad();
}

/// Least m >= 1 with α^m = 1; std::nullopt means infinite order.
inline std::optional<std::int64_t> order_of(const UnitPhase& alpha) {
  if (!alpha.is_rational()) return std::nullopt;
  return alpha.denominator();
}

/// Forward-minus-backward arc count along a walk, and its edge count.
struct ArcBalance {
  std::int64_t balance = 0;
  std::int64_t length = 0;

  friend bool operator==(const ArcBalance&, const ArcBalance&) = default;
};

inline ArcBalance arc_balance(const MixedGraph& g, const Walk& w) {
  validate_walk(g, w);
  ArcBalance b;
  for (std::size_t k = 0; k + 1 < w.vertices.size(); ++k) {
    switch (g.relation(w.vertices[k], w.vertices[k + 1])) {
      case Relation::Forward: ++b.balance; break;
      case Relation::Backward: --b.balance; break;
      default: break;
    }
    ++b.length;
  }
  return b;
}

/// Entry h_{uv} of H^α as a phase (u and v must be adjacent).
inline Phase entry_phase(const MixedGraph& g, const UnitPhase& alpha, int u, int v) {
  switch (g.relation(u, v)) {
    case Relation::Digon: return Phase::identity();
    case Relation::Forward: return alpha.phase();
    case Relation::Backward: return alpha.phase().conj();
    case Relation::None: break;
  }
  throw PreconditionError("no edge between " + std::to_string(u) + " and " + std::to_string(v));
}

/// h_α(W): product of the H^α entries along the walk.
inline Phase walk_value_h(const MixedGraph& g, const UnitPhase& alpha, const Walk& w) {
  validate_walk(g, w);
  Phase value;
  for (std::size_t k = 0; k + 1 < w.vertices.size(); ++k) {
    value *= entry_phase(g, alpha, w.vertices[k], w.vertices[k + 1]);
  }
  return value;
}

/// g_α(W) = (-1)^{#edges} h_α(W).
inline Phase walk_value_g(const MixedGraph& g, const UnitPhase& alpha, const Walk& w) {
  Phase h = walk_value_h(g, alpha, w);
  return w.edge_count() % 2 == 0 ? h : h * Phase::minus_one();
}

}  // namespace mixedspec

#endif  // MIXEDSPEC_PHASE_HPP
