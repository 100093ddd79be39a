#pragma once

// Perron-Kreuser bounds on |h_n(x)| = |y_n(x) / y_{n-1}(x)| for systems with
// d_n > 0, e_n > 0, and the logarithmic-derivative brackets that follow from
// them.

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "ratio_bounds/system_core.hpp"

namespace ratio_bounds {

enum class SolutionKind { Minimal, Dominant };

/// Which solution of the recurrence y_n is, and the sign s of h_n.
struct SolutionClass {
  SolutionKind kind = SolutionKind::Minimal;
  int h_sign = 1;

  static SolutionClass minimal(int s) { return {SolutionKind::Minimal, s}; }
  static SolutionClass dominant(int s) { return {SolutionKind::Dominant, s}; }
};

enum class BoundSide { UpperOnAbs, LowerOnAbs };

inline BoundSide opposite(BoundSide s) {
  return s == BoundSide::UpperOnAbs ? BoundSide::LowerOnAbs : BoundSide::UpperOnAbs;
}

inline const char* to_string(BoundSide s) {
  return s == BoundSide::UpperOnAbs ? "UpperOnAbs" : "LowerOnAbs";
}

struct Provenance {
  enum class Kind { PK1, PK2Minimal, PK2Dominant, Iterated, ClosedForm };
  Kind kind = Kind::PK1;
  int depth = 0;

  static Provenance pk1() { return {Kind::PK1, 0}; }
  static Provenance pk2_minimal() { return {Kind::PK2Minimal, 0}; }
  static Provenance pk2_dominant() { return {Kind::PK2Dominant, 0}; }
  static Provenance iterated(int depth) { return {Kind::Iterated, depth}; }

  std::string to_string() const {
    switch (kind) {
      case Kind::PK1: return "PK1";
      case Kind::PK2Minimal: return "PK2Minimal";
      case Kind::PK2Dominant: return "PK2Dominant";
      case Kind::Iterated: return "Iterated(" + std::to_string(depth) + ")";
      case Kind::ClosedForm: return "ClosedForm";
    }
    return "?";
  }
};

template <std::floating_point Real = double>
struct Bound {
  Real value = 0;
  BoundSide side = BoundSide::UpperOnAbs;
  Provenance provenance;
  bool valid = true;
  std::string reason;
};

/// [lower, upper] enclosing a non-negative target quantity. Either end may be
/// trivial (0 or +inf) when only a one-sided bound is certified. The one
/// exception is a family lower bound on a signed ratio (laguerre-neg with
/// alpha < 0), where lower may be negative.
template <std::floating_point Real = double>
struct Enclosure {
  Real lower = 0;
  Real upper = std::numeric_limits<Real>::infinity();
  std::string target;
  std::string provenance;

  Real width() const { return upper - lower; }
  Real midpoint() const { return (upper + lower) / Real(2); }
  Real relative_width() const {
    const Real mid = midpoint();
    return mid > Real(0) ? width() / mid : std::numeric_limits<Real>::infinity();
  }
  bool contains(Real v, Real rel_slack = Real(0)) const {
    // Infinite ends take no slack (0 * inf would be NaN).
    const Real lo = std::isfinite(lower) ? lower - rel_slack * std::fabs(lower) : lower;
    const Real hi = std::isfinite(upper) ? upper + rel_slack * std::fabs(upper) : upper;
    return v >= lo && v <= hi;
  }
  bool two_sided() const { return lower > Real(0) && std::isfinite(upper); }
};

/// Analytic facts a family supplies for its validity region: the direction
/// of lambda^s in x, and the initial-condition hypothesis on h at the end of
/// the interval. Either may be left empty.
template <std::floating_point Real = double>
struct Certification {
  std::optional<Direction> root_direction;
  // Returns a failure description when (n, x) is not covered.
  std::function<std::optional<std::string>(Real n, Real x)> hypothesis;
};

namespace detail {

template <std::floating_point Real>
std::string at(Real n, Real x) {
  std::ostringstream os;
  os.precision(17);
  os << "n=" << n << ", x=" << x;
  return os.str();
}

template <std::floating_point Real>
Coefficients<Real> require_positive_pair(const CoefficientSystem<Real>& sys, Real n, Real x) {
  const auto c = evaluate(sys, n, x);
  if (!(c.d > Real(0) && c.e > Real(0))) {
    throw RegimeError(sys.name + ": bound needs d>0 and e>0 (sign-normalize first) at " +
                      at(n, x));
  }
  return c;
}

template <std::floating_point Real>
void check_hypothesis(const CoefficientSystem<Real>& sys, const Certification<Real>& cert,
                      Real n, Real x) {
  if (!cert.hypothesis) return;
  if (auto why = cert.hypothesis(n, x)) {
    throw ValidityError(sys.name + ": hypothesis not certified at " + at(n, x) + ": " + *why);
  }
}

template <std::floating_point Real>
Direction root_direction(const CoefficientSystem<Real>& sys, const Certification<Real>& cert,
                         Real n, Real x, int s) {
  Direction dir = cert.root_direction
                      ? *cert.root_direction
                      : local_root_direction(sys, n, x, s > 0 ? RootChoice::Plus : RootChoice::Minus);
  if (dir == Direction::NotMonotonic) {
    throw MonotonicityError(sys.name + ": lambda^s not monotonic at " + at(n, x));
  }
  return dir;
}

// eta = (b - a) / (2 sqrt(d e)) for d e > 0.
template <std::floating_point Real>
Real eta_of(const Coefficients<Real>& c) {
  return (c.b - c.a) / (Real(2) * std::sqrt(c.d * c.e));
}

// R / (s eta + sqrt(1 + eta^2)) without cancellation.
template <std::floating_point Real>
Real first_pk_value(Real R, Real eta, int s) {
  const Real q = std::hypot(Real(1), eta);
  const Real se = Real(s) * eta;
  return se >= Real(0) ? R / (se + q) : R * (q - se);
}

}  // namespace detail

/// F_n^s = R_n / (s eta_n + sqrt(1 + eta_n^2)) = |lambda_n^s|.
/// Upper bound on |h_n| where lambda^s increases in x, lower where it decreases.
template <std::floating_point Real>
Bound<Real> first_pk_bound(const CoefficientSystem<Real>& sys, Real n, Real x, SolutionClass cls,
                           const Certification<Real>& cert = {}) {
  const auto c = detail::require_positive_pair(sys, n, x);
  detail::check_hypothesis(sys, cert, n, x);
  const Direction dir = detail::root_direction(sys, cert, n, x, cls.h_sign);
  const Real R = std::sqrt(c.d / c.e);
  Bound<Real> b;
  b.value = detail::first_pk_value(R, detail::eta_of(c), cls.h_sign);
  b.side = dir == Direction::Increasing ? BoundSide::UpperOnAbs : BoundSide::LowerOnAbs;
  b.provenance = Provenance::pk1();
  b.reason = std::string("lambda^s ") + to_string(dir);
  return b;
}

/// The second printed form of F_n^s, R_n (-s eta_n + sqrt(1 + eta_n^2)).
template <std::floating_point Real>
Real first_pk_value_difference_form(const CoefficientSystem<Real>& sys, Real n, Real x, int s) {
  const auto c = detail::require_positive_pair(sys, n, x);
  const Real eta = detail::eta_of(c);
  return std::sqrt(c.d / c.e) * (-Real(s) * eta + std::sqrt(Real(1) + eta * eta));
}

/// S_n^{s+} for minimal solutions (needs s * eta_bar_n >= 0):
///   D_n E_n R_n / (s (2 D_n eta_bar_n - eta_{n+1}) + sqrt(1 + eta_{n+1}^2)).
/// It lies on the opposite side of |h_n| from F_n^s.
template <std::floating_point Real>
Bound<Real> second_pk_bound_minimal(const CoefficientSystem<Real>& sys, Real n, Real x,
                                    SolutionClass cls, const Certification<Real>& cert = {}) {
  if (cls.kind != SolutionKind::Minimal) {
    throw ClassError(sys.name + ": second minimal bound requested for a dominant solution");
  }
  const auto cn = detail::require_positive_pair(sys, n, x);
  const auto cn1 = detail::require_positive_pair(sys, n + Real(1), x);
  // The first bound is used at n+1; that is where the hypothesis must hold.
  detail::check_hypothesis(sys, cert, n + Real(1), x);
  const auto rec = recurrence_data(sys, n, x);
  const int s = cls.h_sign;
  // x at the edge of the region (eta_bar = 0) is admitted by continuity.
  if (Real(s) * rec.eta_bar < Real(0)) {
    throw ClassError(sys.name + ": s*eta_bar_n < 0, not a minimal-solution point at " +
                     detail::at(n, x));
  }
  const Direction dir = detail::root_direction(sys, cert, n + Real(1), x, s);
  const Real R = std::sqrt(cn.d / cn.e);
  const Real eta1 = detail::eta_of(cn1);
  const Real den = Real(s) * (Real(2) * rec.D * rec.eta_bar - eta1) + std::hypot(Real(1), eta1);
  if (!(den > Real(0))) {
    throw DenominatorSignError(sys.name + ": non-positive denominator in S_n^{s+} at " +
                               detail::at(n, x));
  }
  Bound<Real> b;
  b.value = rec.D * rec.E * R / den;
  b.side = dir == Direction::Increasing ? BoundSide::LowerOnAbs : BoundSide::UpperOnAbs;
  b.provenance = Provenance::pk2_minimal();
  b.reason = std::string("lambda^s ") + to_string(dir) + ", s*eta_bar>=0";
  return b;
}

/// S_n^{s-} for dominant solutions (needs s * eta_bar_{n-1} <= 0):
///   D_{n-1} E_{n-1} R_n (-s (2 eta_bar_{n-1} / E_{n-1} - eta_{n-1}) + sqrt(1 + eta_{n-1}^2)).
template <std::floating_point Real>
Bound<Real> second_pk_bound_dominant(const CoefficientSystem<Real>& sys, Real n, Real x,
                                     SolutionClass cls, const Certification<Real>& cert = {}) {
  if (cls.kind != SolutionKind::Dominant) {
    throw ClassError(sys.name + ": second dominant bound requested for a minimal solution");
  }
  const auto cn = detail::require_positive_pair(sys, n, x);
  const auto cp = detail::require_positive_pair(sys, n - Real(1), x);
  // The first bound is used at n-1.
  detail::check_hypothesis(sys, cert, n - Real(1), x);
  const auto rec = recurrence_data(sys, n - Real(1), x);
  const int s = cls.h_sign;
  if (Real(s) * rec.eta_bar > Real(0)) {
    throw ClassError(sys.name + ": s*eta_bar_{n-1} > 0, not a dominant-solution point at " +
                     detail::at(n, x));
  }
  const Direction dir = detail::root_direction(sys, cert, n - Real(1), x, s);
  const Real R = std::sqrt(cn.d / cn.e);
  const Real etap = detail::eta_of(cp);
  const Real w = -Real(s) * (Real(2) * rec.eta_bar / rec.E - etap);
  const Real tail = w + std::hypot(Real(1), etap);
  if (!(tail > Real(0))) {
    throw DenominatorSignError(sys.name + ": non-positive factor in S_n^{s-} at " +
                               detail::at(n, x));
  }
  Bound<Real> b;
  b.value = rec.D * rec.E * R * tail;
  b.side = dir == Direction::Increasing ? BoundSide::LowerOnAbs : BoundSide::UpperOnAbs;
  b.provenance = Provenance::pk2_dominant();
  b.reason = std::string("lambda^s ") + to_string(dir) + ", s*eta_bar_{n-1}<=0";
  return b;
}

/// Slack used when checking that a computed lower end does not exceed the upper.
template <std::floating_point Real>
constexpr Real consistency_slack() {
  return Real(1e-12);
}

template <std::floating_point Real>
Enclosure<Real> enclosure_from_bounds(const Bound<Real>& p, const Bound<Real>& q,
                                      const std::string& where) {
  if (p.side == q.side) {
    throw InconsistentBoundsError(where + ": both bounds fall on the same side");
  }
  const Bound<Real>& lo = p.side == BoundSide::LowerOnAbs ? p : q;
  const Bound<Real>& up = p.side == BoundSide::UpperOnAbs ? p : q;
  if (lo.value > up.value * (Real(1) + consistency_slack<Real>())) {
    std::ostringstream os;
    os.precision(17);
    os << where << ": lower " << lo.value << " exceeds upper " << up.value;
    throw InconsistentBoundsError(os.str());
  }
  Enclosure<Real> enc;
  enc.lower = std::min(lo.value, up.value);
  enc.upper = up.value;
  enc.provenance = lo.provenance.to_string() + "/" + up.provenance.to_string();
  return enc;
}

/// First bound combined with the second bound matching the solution class.
template <std::floating_point Real>
Enclosure<Real> pk_enclosure(const CoefficientSystem<Real>& sys, Real n, Real x,
                             SolutionClass cls, const Certification<Real>& cert = {}) {
  const auto f = first_pk_bound(sys, n, x, cls, cert);
  const auto g = cls.kind == SolutionKind::Minimal ? second_pk_bound_minimal(sys, n, x, cls, cert)
                                                   : second_pk_bound_dominant(sys, n, x, cls, cert);
  auto enc = enclosure_from_bounds(f, g, sys.name + " at " + detail::at(n, x));
  enc.target = "|h_n(x)|";
  return enc;
}

/// Value of  s (a_k + b_k)/2 + sqrt(d_k e_k + ((b_k - a_k)/2)^2), which
/// separates s y'_{k-1}/y_{k-1} from s y'_k/y_k. Defined for d e >= 0.
template <std::floating_point Real>
Real lg_separator(const CoefficientSystem<Real>& sys, Real k, Real x, int s) {
  sys.require_in_domain(k, x);
  const Real a = sys.a(k, x), b = sys.b(k, x), d = sys.d(k, x), e = sys.e(k, x);
  if (d * e < Real(0)) {
    throw RegimeError(sys.name + ": log-derivative separator needs d*e >= 0 at " +
                      detail::at(k, x));
  }
  const Real half = (b - a) / Real(2);
  return Real(s) * (a + b) / Real(2) + std::sqrt(d * e + half * half);
}

template <std::floating_point Real = double>
struct LogDerivBrackets {
  // Bracket for y'_{n-1}/y_{n-1}; one end is infinite when n-1 is outside the domain.
  Interval<Real> previous;
  // Bracket for y'_n/y_n.
  Interval<Real> current;
  Real separator_n = 0;
  Direction direction = Direction::NotMonotonic;
};

/// Brackets on logarithmic derivatives from the separators at n-1, n, n+1.
/// With lambda^s increasing, s y'_{k-1}/y_{k-1} < M_k < s y'_k/y_k; reversed
/// when decreasing.
template <std::floating_point Real>
LogDerivBrackets<Real> lg_logderiv_bounds(const CoefficientSystem<Real>& sys, Real n, Real x,
                                          SolutionClass cls, const Certification<Real>& cert = {}) {
  const int s = cls.h_sign;
  detail::check_hypothesis(sys, cert, n, x);
  const Direction dir = detail::root_direction(sys, cert, n, x, s);
  const Real inf = std::numeric_limits<Real>::infinity();
  const Real m_n = lg_separator(sys, n, x, s);
  const Real m_next = lg_separator(sys, n + Real(1), x, s);
  const bool has_prev = sys.in_domain(n - Real(1), x);
  const Real m_prev = has_prev ? lg_separator(sys, n - Real(1), x, s) : Real(0);

  // Brackets in the s-scaled variable s*y'/y.
  Real cur_lo, cur_hi, prev_lo, prev_hi;
  if (dir == Direction::Increasing) {
    cur_lo = m_n;
    cur_hi = m_next;
    prev_lo = has_prev ? m_prev : -inf;
    prev_hi = m_n;
  } else {
    cur_lo = m_next;
    cur_hi = m_n;
    prev_lo = m_n;
    prev_hi = has_prev ? m_prev : inf;
  }
  if (cur_lo > cur_hi) {
    throw InconsistentBoundsError(sys.name + ": empty log-derivative bracket at " +
                                  detail::at(n, x));
  }
  auto unscale = [s](Real lo, Real hi) {
    return s > 0 ? Interval<Real>::open(lo, hi) : Interval<Real>::open(-hi, -lo);
  };
  LogDerivBrackets<Real> out;
  out.current = unscale(cur_lo, cur_hi);
  out.previous = unscale(prev_lo, prev_hi);
  out.separator_n = m_n;
  out.direction = dir;
  return out;
}

}  // namespace ratio_bounds
