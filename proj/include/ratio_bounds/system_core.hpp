#pragma once

// First-order difference-differential systems
//
//   y_n'     = a_n(x) y_n     + d_n(x) y_{n-1}
//   y_{n-1}' = b_n(x) y_{n-1} + e_n(x) y_n
//
// and the characteristic quantities of the Riccati equation satisfied by
// h_n = y_n / y_{n-1}:  h' = d - (b - a) h - e h^2.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "ratio_bounds/errors.hpp"

namespace ratio_bounds {

template <std::floating_point Real>
constexpr int sign_of(Real v) {
  return (Real(0) < v) - (v < Real(0));
}

/// Relative residual tolerance for characteristic roots: 8 machine epsilons.
template <std::floating_point Real>
constexpr Real root_tolerance() {
  return Real(8) * std::numeric_limits<Real>::epsilon();
}

template <std::floating_point Real = double>
struct Interval {
  Real lo = -std::numeric_limits<Real>::infinity();
  Real hi = std::numeric_limits<Real>::infinity();
  bool lo_open = false;
  bool hi_open = false;

  static Interval closed(Real l, Real h) { return {l, h, false, false}; }
  static Interval open(Real l, Real h) { return {l, h, true, true}; }
  static Interval left_open(Real l, Real h) { return {l, h, true, false}; }
  static Interval everything() { return {}; }

  bool contains(Real v) const {
    if (std::isnan(v)) return false;
    const bool above = lo_open ? v > lo : v >= lo;
    const bool below = hi_open ? v < hi : v <= hi;
    return above && below;
  }
  bool contains(const Interval& other) const {
    auto lo_ok = lo_open && !other.lo_open ? other.lo > lo : other.lo >= lo;
    auto hi_ok = hi_open && !other.hi_open ? other.hi < hi : other.hi <= hi;
    return lo_ok && hi_ok;
  }
  std::string describe() const {
    std::ostringstream os;
    os.precision(17);
    os << (lo_open ? "(" : "[") << lo << ", " << hi << (hi_open ? ")" : "]");
    return os.str();
  }
};

/// Coefficients a_n(x), b_n(x), d_n(x), e_n(x) of a difference-differential
/// system over an index and a variable domain.
template <std::floating_point Real = double>
struct CoefficientSystem {
  using Coefficient = std::function<Real(Real n, Real x)>;

  std::string name;
  Coefficient a;
  Coefficient b;
  Coefficient d;
  Coefficient e;
  Interval<Real> index_domain = Interval<Real>::everything();
  Interval<Real> x_domain = Interval<Real>::everything();

  bool in_domain(Real n, Real x) const {
    return index_domain.contains(n) && x_domain.contains(x);
  }

  void require_in_domain(Real n, Real x) const {
    if (!index_domain.contains(n)) {
      std::ostringstream os;
      os.precision(17);
      os << name << ": index n=" << n << " outside " << index_domain.describe();
      throw DomainError(os.str());
    }
    if (!x_domain.contains(x)) {
      std::ostringstream os;
      os.precision(17);
      os << name << ": x=" << x << " outside " << x_domain.describe();
      throw DomainError(os.str());
    }
  }
};

template <std::floating_point Real>
struct Coefficients {
  Real a, b, d, e;
};

template <std::floating_point Real>
Coefficients<Real> evaluate(const CoefficientSystem<Real>& sys, Real n, Real x) {
  sys.require_in_domain(n, x);
  Coefficients<Real> c{sys.a(n, x), sys.b(n, x), sys.d(n, x), sys.e(n, x)};
  if (c.d == Real(0) || c.e == Real(0)) {
    std::ostringstream os;
    os.precision(17);
    os << sys.name << ": vanishing coupling coefficient at n=" << n << ", x=" << x
       << " (d=" << c.d << ", e=" << c.e << ")";
    throw DomainError(os.str());
  }
  return c;
}

/// Characteristic data of the Riccati equation at (n, x).
///
/// lambda_plus is always the larger root. When d*e > 0 it is the positive
/// root, so lambda^s (the root with the sign s of h) is lambda_plus for
/// s = +1 and lambda_minus for s = -1.
template <std::floating_point Real = double>
struct CharacteristicData {
  Real eta;
  Real R;
  int s_product;
  Real lambda_minus;
  Real lambda_plus;

  Real root_with_sign(int s) const { return s > 0 ? lambda_plus : lambda_minus; }
};

template <std::floating_point Real = double>
struct RecurrenceData {
  Real eta_bar;
  Real E;
  Real D;
  Real lambda_bar_minus;
  Real lambda_bar_plus;
};

enum class Regime { PositiveProduct, NegativeMonotonic, Oscillatory };

inline const char* to_string(Regime r) {
  switch (r) {
    case Regime::PositiveProduct: return "PositiveProduct";
    case Regime::NegativeMonotonic: return "NegativeMonotonic";
    case Regime::Oscillatory: return "Oscillatory";
  }
  return "?";
}

enum class Direction { Increasing, Decreasing, NotMonotonic };

inline const char* to_string(Direction d) {
  switch (d) {
    case Direction::Increasing: return "Increasing";
    case Direction::Decreasing: return "Decreasing";
    case Direction::NotMonotonic: return "NotMonotonic";
  }
  return "?";
}

enum class RootChoice { Plus, Minus };

namespace detail {

template <std::floating_point Real>
using Wide = std::conditional_t<(sizeof(Real) < sizeof(long double)), long double, Real>;

// Roots of  A lam^2 + B lam - C = 0  written as
//   lam = sign(A) * R * (-eta +- sqrt(eta^2 + s)),
//   R = sqrt|C/A|, eta = B / (2 sqrt|A C|), s = sign(A C).
// The cancelling root is taken from the product lam+ lam- = -C/A.
template <std::floating_point Real>
struct QuadraticRoots {
  Real eta;
  Real R;
  int s;
  Real lo;
  Real hi;
};

template <std::floating_point Real>
QuadraticRoots<Real> riccati_roots(Real A, Real B, Real C, const char* what) {
  using W = Wide<Real>;
  const W wa = A, wb = B, wc = C;
  const int s = sign_of(A) * sign_of(C);
  const W root_abs = std::sqrt(std::fabs(wa * wc));
  const W eta = wb / (W(2) * root_abs);
  const W R = std::sqrt(std::fabs(wc / wa));
  const W disc = eta * eta + W(s);
  if (disc < W(0)) {
    std::ostringstream os;
    os.precision(17);
    os << what << ": complex characteristic roots (d*e<0, eta^2=" << double(eta * eta)
       << "<1)";
    throw ComplexRootsError(os.str());
  }
  const W q = std::sqrt(disc);
  const W t = W(sign_of(A)) * R;
  W r1, r2;
  if (eta >= W(0)) {
    r1 = -t * (eta + q);
    r2 = t * W(s) / (eta + q);
  } else {
    r2 = t * (-eta + q);
    r1 = -t * W(s) / (-eta + q);
  }
  return {Real(eta), Real(R), s, Real(std::min(r1, r2)), Real(std::max(r1, r2))};
}

}  // namespace detail

/// Characteristic roots lambda^+- at (n, x), computed in the
/// cancellation-free conjugate form.
template <std::floating_point Real>
CharacteristicData<Real> characteristic_data(const CoefficientSystem<Real>& sys, Real n,
                                             Real x) {
  const auto c = evaluate(sys, n, x);
  const auto r = detail::riccati_roots<Real>(c.e, c.b - c.a, c.d, sys.name.c_str());
  return {r.eta, r.R, r.s, r.lo, r.hi};
}

/// Both roots from the textbook difference form  sign(e) R (-eta +- sqrt(eta^2+s)).
/// Only used to cross-check the conjugate form.
template <std::floating_point Real>
std::pair<Real, Real> difference_form_roots(const CharacteristicData<Real>& cd, Real e_sign) {
  const Real q = std::sqrt(cd.eta * cd.eta + Real(cd.s_product));
  const Real t = e_sign * cd.R;
  const Real r1 = t * (-cd.eta + q);
  const Real r2 = t * (-cd.eta - q);
  return {std::min(r1, r2), std::max(r1, r2)};
}

/// Roots of the characteristic equation of the three-term recurrence
///   e_{n+1} lam^2 + (b_{n+1} - a_n) lam - d_n = 0.
template <std::floating_point Real>
RecurrenceData<Real> recurrence_data(const CoefficientSystem<Real>& sys, Real n, Real x) {
  const auto cn = evaluate(sys, n, x);
  const auto cn1 = evaluate(sys, n + Real(1), x);
  const auto r = detail::riccati_roots<Real>(cn1.e, cn1.b - cn.a, cn.d, sys.name.c_str());
  RecurrenceData<Real> out;
  out.eta_bar = r.eta;
  out.E = std::sqrt(std::fabs(cn.e / cn1.e));
  out.D = std::sqrt(std::fabs(cn.d / cn1.d));
  out.lambda_bar_minus = r.lo;
  out.lambda_bar_plus = r.hi;
  return out;
}

/// Residual |e lam^2 + (b-a) lam - d| divided by its natural scale
/// |e| lam^2 + |b-a| |lam| + |d|, evaluated in extended precision.
template <std::floating_point Real>
Real relative_quadratic_residual(Real e, Real bma, Real d, Real lam) {
  using W = detail::Wide<Real>;
  const W we = e, wb = bma, wd = d, wl = lam;
  const W res = std::fabs(we * wl * wl + wb * wl - wd);
  const W scale = std::fabs(we) * wl * wl + std::fabs(wb) * std::fabs(wl) + std::fabs(wd);
  return scale == W(0) ? Real(0) : Real(res / scale);
}

template <std::floating_point Real>
Regime classify_regime(const CoefficientSystem<Real>& sys, Real n, Real x) {
  const auto c = evaluate(sys, n, x);
  const int s = sign_of(c.d) * sign_of(c.e);
  if (s > 0) return Regime::PositiveProduct;
  const Real eta = (c.b - c.a) / (Real(2) * std::sqrt(std::fabs(c.d * c.e)));
  // eta^2 = 1 has a double root; the theorems need strict inequality.
  return eta * eta > Real(1) ? Regime::NegativeMonotonic : Regime::Oscillatory;
}

/// Outcome of a sampled monotonicity check of lambda^s on an interval.
template <std::floating_point Real = double>
struct MonotonicityReport {
  Direction direction = Direction::NotMonotonic;
  bool zero_derivative = false;
  // True when d/e was found x-constant and the sign of -eta' was used.
  bool used_eta_rule = false;
  int grid = 0;
};

namespace detail {

template <std::floating_point Real>
Real root_value(const CoefficientSystem<Real>& sys, Real n, Real x, RootChoice which) {
  const auto cd = characteristic_data(sys, n, x);
  return which == RootChoice::Plus ? cd.lambda_plus : cd.lambda_minus;
}

template <std::floating_point Real>
Real eta_value(const CoefficientSystem<Real>& sys, Real n, Real x) {
  const auto c = evaluate(sys, n, x);
  return (c.b - c.a) / (Real(2) * std::sqrt(std::fabs(c.d * c.e)));
}

template <std::floating_point Real>
Direction direction_from_signs(const std::vector<Real>& slopes, Real scale,
                               bool& zero_derivative) {
  const Real tiny = Real(64) * std::numeric_limits<Real>::epsilon() * std::max(scale, Real(1));
  bool any_pos = false, any_neg = false, all_flat = true;
  for (Real s : slopes) {
    if (std::fabs(s) > tiny) all_flat = false;
    if (s > tiny) any_pos = true;
    if (s < -tiny) any_neg = true;
  }
  zero_derivative = all_flat;
  if (all_flat || (any_pos && any_neg)) return Direction::NotMonotonic;
  return any_pos ? Direction::Increasing : Direction::Decreasing;
}

}  // namespace detail

/// Direction of d lambda^s / dx on `interval`, sampled on `grid` points.
///
/// When d*e > 0 and d/e is x-constant on the grid, the sign of the derivative
/// is -sign(e) * sign(eta'); otherwise consecutive root values are differenced.
template <std::floating_point Real>
MonotonicityReport<Real> root_monotonicity(const CoefficientSystem<Real>& sys, Real n,
                                           const Interval<Real>& interval, int grid,
                                           RootChoice which) {
  if (grid < 3) throw DomainError("root_monotonicity: grid must have at least 3 points");
  if (!sys.x_domain.contains(interval) || !(interval.lo < interval.hi)) {
    throw DomainError(sys.name + ": interval " + interval.describe() + " not inside x domain " +
                      sys.x_domain.describe());
  }
  // Open ends are nudged inward so every sample is a valid evaluation point.
  const Real span = interval.hi - interval.lo;
  const Real lo = interval.lo_open ? interval.lo + span * Real(1e-9) : interval.lo;
  const Real hi = interval.hi_open ? interval.hi - span * Real(1e-9) : interval.hi;
  std::vector<Real> xs(static_cast<std::size_t>(grid));
  for (int i = 0; i < grid; ++i) xs[i] = lo + (hi - lo) * Real(i) / Real(grid - 1);

  MonotonicityReport<Real> rep;
  rep.grid = grid;

  bool positive_product = true;
  bool ratio_constant = true;
  Real ratio0 = 0;
  for (int i = 0; i < grid; ++i) {
    const auto c = evaluate(sys, n, xs[i]);
    if (sign_of(c.d) * sign_of(c.e) <= 0) positive_product = false;
    const Real ratio = c.d / c.e;
    if (i == 0) {
      ratio0 = ratio;
    } else if (std::fabs(ratio - ratio0) >
               Real(1e-12) * std::max(std::fabs(ratio0), std::numeric_limits<Real>::min())) {
      ratio_constant = false;
    }
  }

  std::vector<Real> slopes;
  Real scale = 0;
  if (positive_product && ratio_constant) {
    rep.used_eta_rule = true;
    const Real e_sign = Real(sign_of(sys.e(n, xs[0])));
    for (int i = 0; i + 1 < grid; ++i) {
      const Real e0 = detail::eta_value(sys, n, xs[i]);
      const Real e1 = detail::eta_value(sys, n, xs[i + 1]);
      scale = std::max({scale, std::fabs(e0), std::fabs(e1)});
      slopes.push_back(-e_sign * (e1 - e0));
    }
  } else {
    for (int i = 0; i + 1 < grid; ++i) {
      const Real l0 = detail::root_value(sys, n, xs[i], which);
      const Real l1 = detail::root_value(sys, n, xs[i + 1], which);
      scale = std::max({scale, std::fabs(l0), std::fabs(l1)});
      slopes.push_back(l1 - l0);
    }
  }
  rep.direction = detail::direction_from_signs(slopes, scale, rep.zero_derivative);
  return rep;
}

/// Local direction of lambda^s at x by a central difference.
template <std::floating_point Real>
Direction local_root_direction(const CoefficientSystem<Real>& sys, Real n, Real x,
                               RootChoice which) {
  const Real h = std::cbrt(std::numeric_limits<Real>::epsilon()) * std::max(Real(1), std::fabs(x));
  Real xl = x - h, xr = x + h;
  if (!sys.x_domain.contains(xl)) xl = x;
  if (!sys.x_domain.contains(xr)) xr = x;
  if (xl == xr) throw MonotonicityError(sys.name + ": cannot difference lambda at domain point");
  const Real l0 = detail::root_value(sys, n, xl, which);
  const Real l1 = detail::root_value(sys, n, xr, which);
  const Real scale = std::max({std::fabs(l0), std::fabs(l1), Real(1)});
  const Real slope = l1 - l0;
  if (std::fabs(slope) <= Real(64) * std::numeric_limits<Real>::epsilon() * scale)
    return Direction::NotMonotonic;
  return slope > 0 ? Direction::Increasing : Direction::Decreasing;
}

/// Sign-constancy of d and e over `interval` for fixed n, by sampling.
/// Returns an empty string when both signs are constant, else a description.
template <std::floating_point Real>
std::string check_sign_constancy(const CoefficientSystem<Real>& sys, Real n,
                                 const Interval<Real>& interval, int samples = 256) {
  const Real lo = std::isfinite(interval.lo) ? interval.lo : Real(-50);
  const Real hi = std::isfinite(interval.hi) ? interval.hi : Real(50);
  int sd = 0, se = 0;
  for (int i = 0; i < samples; ++i) {
    // Midpoints of a uniform partition stay clear of open endpoints.
    const Real x = lo + (hi - lo) * (Real(i) + Real(0.5)) / Real(samples);
    if (!sys.x_domain.contains(x)) continue;
    const int cd = sign_of(sys.d(n, x));
    const int ce = sign_of(sys.e(n, x));
    if (cd == 0 || ce == 0) return sys.name + ": vanishing d or e inside sampled interval";
    if (sd == 0) {
      sd = cd;
      se = ce;
    } else if (cd != sd || ce != se) {
      return sys.name + ": sign of d or e changes inside sampled interval";
    }
  }
  return {};
}

/// The system for y_k -> (-1)^k y_k: d and e change sign, a and b do not, and
/// h changes sign.
template <std::floating_point Real>
CoefficientSystem<Real> sign_normalized(const CoefficientSystem<Real>& sys) {
  auto out = sys;
  out.d = [d = sys.d](Real n, Real x) { return -d(n, x); };
  out.e = [e = sys.e](Real n, Real x) { return -e(n, x); };
  out.name = sys.name + "/sign-normalized";
  return out;
}

}  // namespace ratio_bounds
