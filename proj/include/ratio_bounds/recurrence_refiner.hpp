#pragma once

// Refinement of Perron-Kreuser enclosures through the three-term recurrence
//   e_{n+1} y_{n+1} + (b_{n+1} - a_n) y_n - d_n y_{n-1} = 0.

#include <cmath>
#include <limits>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "ratio_bounds/bounds_engine.hpp"

namespace ratio_bounds {

inline constexpr int kMaxRefinementDepth = 64;
inline constexpr int kDefaultRefinementDepth = 16;
inline constexpr double kDefaultRelTol = 1e-12;

template <std::floating_point Real = double>
struct EnclosureSequence {
  std::vector<Enclosure<Real>> enclosures;
  bool converged = false;
  Real final_width_rel = std::numeric_limits<Real>::infinity();

  const Enclosure<Real>& last() const { return enclosures.back(); }
};

/// One backward step  h_n = d_n / (b_{n+1} - a_n + e_{n+1} h_{n+1})  applied to
/// a bound on |h_{n+1}|. The side flips when d_n e_{n+1} > 0.
template <std::floating_point Real>
Bound<Real> ttrr_step_down(const CoefficientSystem<Real>& sys, Real n, Real x,
                           const Bound<Real>& bound_at_next, SolutionClass cls) {
  if (cls.kind != SolutionKind::Minimal) {
    throw ClassError(sys.name + ": backward recurrence steps need a minimal solution");
  }
  const auto cn = evaluate(sys, n, x);
  const auto cn1 = evaluate(sys, n + Real(1), x);
  const int s = cls.h_sign;
  const Real v = bound_at_next.value;
  const bool flips = cn.d * cn1.e > Real(0);
  const BoundSide side = flips ? opposite(bound_at_next.side) : bound_at_next.side;

  Bound<Real> out;
  out.side = side;
  out.provenance = Provenance::iterated(
      bound_at_next.provenance.kind == Provenance::Kind::Iterated ? bound_at_next.provenance.depth + 1
                                                                  : 1);
  if (std::isinf(v)) {
    // |h_{n+1}| unbounded: the image is |h_n| >= 0 or <= +inf, both vacuous.
    out.value = side == BoundSide::LowerOnAbs ? Real(0) : std::numeric_limits<Real>::infinity();
    out.reason = "vacuous input";
    return out;
  }
  const Real den = (cn1.b - cn.a) + cn1.e * Real(s) * v;
  // h_n = d_n / den must carry the sign s.
  if (!(Real(sign_of(cn.d)) * den * Real(s) > Real(0))) {
    std::ostringstream os;
    os.precision(17);
    os << sys.name << ": recurrence denominator " << den << " has wrong sign at n=" << n
       << ", x=" << x;
    throw DenominatorSignError(os.str());
  }
  out.value = std::fabs(cn.d / den);
  out.reason = "backward step";
  return out;
}

/// One forward step  h_n = -(b_n - a_{n-1}) / e_n + (d_{n-1} / e_n) / h_{n-1}
/// applied to a bound on |h_{n-1}|. The side flips when d_{n-1} / e_n > 0.
/// A lower bound that comes out negative is vacuous and is clamped to 0.
template <std::floating_point Real>
Bound<Real> ttrr_step_up(const CoefficientSystem<Real>& sys, Real n, Real x,
                         const Bound<Real>& bound_at_prev, SolutionClass cls) {
  if (cls.kind != SolutionKind::Dominant) {
    throw ClassError(sys.name + ": forward recurrence steps need a dominant solution");
  }
  const auto cn = evaluate(sys, n, x);
  const auto cp = evaluate(sys, n - Real(1), x);
  const int s = cls.h_sign;
  const Real v = bound_at_prev.value;
  const Real coupling = cp.d / cn.e;
  const BoundSide side = coupling > Real(0) ? opposite(bound_at_prev.side) : bound_at_prev.side;
  if (!(v > Real(0))) {
    throw DenominatorSignError(sys.name + ": forward step needs a positive bound on |h_{n-1}|");
  }
  Bound<Real> out;
  out.side = side;
  out.provenance = Provenance::iterated(
      bound_at_prev.provenance.kind == Provenance::Kind::Iterated ? bound_at_prev.provenance.depth + 1
                                                                  : 1);
  // |h_n| = s h_n with h_{n-1} = s v.
  const Real abs_value = -Real(s) * (cn.b - cp.a) / cn.e + coupling / v;
  if (abs_value < Real(0)) {
    if (side == BoundSide::UpperOnAbs) {
      throw DenominatorSignError(sys.name + ": forward step produced a negative upper bound");
    }
    out.value = 0;
    out.reason = "vacuous (negative lower bound clamped to 0)";
    return out;
  }
  out.value = abs_value;
  out.reason = "forward step";
  return out;
}

/// Nested enclosures of |h_n(x)| for a minimal solution: depth m takes the
/// Perron-Kreuser enclosure at n+m and steps it down m times. Stops when the
/// relative width drops below rel_tol, or when the width stalls (three
/// successive ratios above 0.99), in which case converged is false.
template <std::floating_point Real>
EnclosureSequence<Real> refine_enclosure(const CoefficientSystem<Real>& sys, Real n, Real x,
                                         SolutionClass cls, int depth,
                                         Real rel_tol = Real(kDefaultRelTol),
                                         const Certification<Real>& cert = {}) {
  if (cls.kind != SolutionKind::Minimal) {
    throw ClassError(sys.name + ": refinement sequences are only convergent for minimal solutions");
  }
  if (depth < 0 || depth > kMaxRefinementDepth) {
    throw DomainError("refinement depth must lie in [0, " + std::to_string(kMaxRefinementDepth) +
                      "]");
  }
  EnclosureSequence<Real> seq;
  auto first = pk_enclosure(sys, n, x, cls, cert);
  seq.enclosures.push_back(first);
  seq.final_width_rel = first.relative_width();
  if (seq.final_width_rel < rel_tol) {
    seq.converged = true;
    return seq;
  }
  int stalled = 0;
  for (int m = 1; m <= depth; ++m) {
    const Real top = n + Real(m);
    // Validity is required at every shifted index; the first failure propagates.
    const auto enc_top = pk_enclosure(sys, top, x, cls, cert);
    Bound<Real> lo{enc_top.lower, BoundSide::LowerOnAbs, Provenance::iterated(0), true, {}};
    Bound<Real> up{enc_top.upper, BoundSide::UpperOnAbs, Provenance::iterated(0), true, {}};
    for (int k = m - 1; k >= 0; --k) {
      lo = ttrr_step_down(sys, n + Real(k), x, lo, cls);
      up = ttrr_step_down(sys, n + Real(k), x, up, cls);
    }
    auto enc = enclosure_from_bounds(lo, up, sys.name + " refinement depth " + std::to_string(m));
    enc.target = "|h_n(x)|";
    enc.provenance = "Iterated(" + std::to_string(m) + ")";
    const Real prev_width = seq.enclosures.back().width();
    seq.enclosures.push_back(enc);
    seq.final_width_rel = enc.relative_width();
    if (seq.final_width_rel < rel_tol) {
      seq.converged = true;
      break;
    }
    stalled = (prev_width > Real(0) && enc.width() / prev_width > Real(0.99)) ? stalled + 1 : 0;
    if (stalled >= 3) break;
  }
  return seq;
}

/// Evaluates  p_1/(q_1 + p_2/(q_2 + ... + p_k/(q_k + tail)))  backward.
template <std::floating_point Real>
Real cf_evaluate_with_tail(std::span<const Real> partial_numerators,
                           std::span<const Real> partial_denominators, Real tail) {
  if (partial_numerators.size() != partial_denominators.size()) {
    throw DomainError("continued fraction: numerator and denominator counts differ");
  }
  Real v = tail;
  for (std::size_t i = partial_numerators.size(); i-- > 0;) {
    const Real den = partial_denominators[i] + v;
    if (den == Real(0)) throw ZeroDivisorError("continued fraction: zero denominator");
    v = partial_numerators[i] / den;
  }
  return v;
}

/// Enclosure of |h_n| / |h_{n+1}| = y_n^2 / (y_{n-1} y_{n+1}) from enclosures
/// of |h_n| and |h_{n+1}|.
template <std::floating_point Real>
Enclosure<Real> turan_enclosure(const Enclosure<Real>& at_n, const Enclosure<Real>& at_next) {
  const Real inf = std::numeric_limits<Real>::infinity();
  Enclosure<Real> out;
  out.lower = std::isinf(at_next.upper) ? Real(0) : at_n.lower / at_next.upper;
  out.upper = at_next.lower > Real(0) && std::isfinite(at_n.upper) ? at_n.upper / at_next.lower
                                                                    : inf;
  out.target = "y_n^2/(y_{n-1} y_{n+1})";
  out.provenance = "turan(" + at_n.provenance + "; " + at_next.provenance + ")";
  return out;
}

template <std::floating_point Real>
Enclosure<Real> turan_enclosure(const CoefficientSystem<Real>& sys, Real n, Real x,
                                SolutionClass at_n, SolutionClass at_next,
                                const Certification<Real>& cert = {}) {
  return turan_enclosure(pk_enclosure(sys, n, x, at_n, cert),
                         pk_enclosure(sys, n + Real(1), x, at_next, cert));
}

}  // namespace ratio_bounds
