#pragma once

// Named bound formulas: Mills ratio continued fractions, iterated
// complementary error functions, parabolic cylinder log-derivatives and value
// ratios, and the real-axis Hermite/Laguerre lower bounds with the zero bounds
// they imply.

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ratio_bounds/bounds_engine.hpp"
#include "ratio_bounds/families/systems.hpp"
#include "ratio_bounds/recurrence_refiner.hpp"

namespace ratio_bounds::families {

namespace detail {

inline std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

inline Bound<double> closed_lower(double v, std::string reason) {
  Bound<double> b;
  b.value = v;
  b.side = BoundSide::LowerOnAbs;
  b.provenance = Provenance{Provenance::Kind::ClosedForm, 0};
  b.reason = std::move(reason);
  return b;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Mills ratio r(x) = e^{x^2/2} int_x^inf e^{-t^2/2} dt = U(1/2,x)/U(-1/2,x).

/// R_0 = 1/x and, for k >= 1,
///   R_k = 1/(x + 1/(x + 2/(x + ... + (k-1)/(x + k/T_k)))),  T_k = (x + sqrt(4k + x^2))/2.
/// Odd k give lower bounds on r(x), even k upper bounds.
inline double mills_cf_value(int k, double x) {
  if (k < 0) throw DomainError("mills: continued fraction order must be >= 0");
  if (!(x >= 0)) throw DomainError("mills: x must be >= 0, got " + detail::fmt(x));
  if (k == 0) return 1.0 / x;
  std::vector<double> nums(static_cast<std::size_t>(k));
  std::vector<double> dens(static_cast<std::size_t>(k), x);
  nums[0] = 1.0;
  for (int j = 1; j < k; ++j) nums[static_cast<std::size_t>(j)] = j;
  const double t = 0.5 * (x + std::sqrt(4.0 * k + x * x));
  return cf_evaluate_with_tail<double>(nums, dens, k / t);
}

/// Nested enclosures [R_{2k-1}(x), R_{2k}(x)] for k = 1..depth.
inline EnclosureSequence<double> mills_bounds(double x, int depth) {
  if (!(x >= 0)) throw DomainError("mills: x must be >= 0, got " + detail::fmt(x));
  if (depth < 1 || depth > kMaxRefinementDepth) {
    throw DomainError("mills: depth must lie in [1, " + std::to_string(kMaxRefinementDepth) + "]");
  }
  EnclosureSequence<double> seq;
  for (int k = 1; k <= depth; ++k) {
    Enclosure<double> e;
    e.lower = mills_cf_value(2 * k - 1, x);
    e.upper = mills_cf_value(2 * k, x);
    e.target = "r(x)";
    e.provenance = "R_" + std::to_string(2 * k - 1) + "/R_" + std::to_string(2 * k);
    seq.enclosures.push_back(e);
    seq.final_width_rel = e.relative_width();
    if (seq.final_width_rel < kDefaultRelTol) {
      seq.converged = true;
      break;
    }
  }
  return seq;
}

// ---------------------------------------------------------------------------
// Iterated complementary error functions.

inline double ierfc_bound_value(int n, double x) {
  return 1.0 / (x + std::sqrt(2.0 * n + x * x));
}

/// [M_{n+1}(x), M_n(x)] with M_n(x) = 1/(x + sqrt(2n + x^2)), bounding
/// i^n erfc(x) / i^{n-1} erfc(x).
inline Enclosure<double> iterated_erfc_ratio_bounds(int n, double x) {
  if (n < 1) throw DomainError("ierfc: n must be >= 1");
  if (!(x >= 0)) throw DomainError("ierfc: x must be >= 0, got " + detail::fmt(x));
  Enclosure<double> e;
  e.lower = ierfc_bound_value(n + 1, x);
  e.upper = ierfc_bound_value(n, x);
  e.target = "i^n erfc(x)/i^(n-1) erfc(x)";
  e.provenance = "M_" + std::to_string(n + 1) + "/M_" + std::to_string(n);
  return e;
}

// ---------------------------------------------------------------------------
// Parabolic cylinder functions.

/// Enclosure of -U'(n,x)/U(n,x): (sqrt(x^2/4 + n - 1/2), sqrt(x^2/4 + n + 1/2))
/// for all real x when n >= 1/2; for -1/2 < n < 1/2 only the upper end holds.
/// The brackets come from the separators of the DDE at index n+1, for U(n,x)
/// when x >= 0 and for U(n,-x) in the variable -x otherwise.
inline Enclosure<double> pcf_logderiv_bounds(double n, double x) {
  if (!(n > -0.5)) {
    throw ValidityError("pcf logderiv: needs n > -1/2, got n=" + detail::fmt(n));
  }
  if (!std::isfinite(x)) throw DomainError("pcf logderiv: x must be finite");
  const auto sys = pcf_system<double>();
  Certification<double> cert;
  cert.root_direction = Direction::Increasing;
  LogDerivBrackets<double> br;
  Interval<double> bracket;
  if (x >= 0) {
    br = lg_logderiv_bounds(sys, n + 1.0, x, SolutionClass::minimal(-1), cert);
    // previous is the bracket for y'_n/y_n = U'/U; negate it.
    bracket = Interval<double>::open(-br.previous.hi, -br.previous.lo);
  } else {
    // d/dt U(n,-t) / U(n,-t) = -U'(n,x)/U(n,x) at t = -x.
    br = lg_logderiv_bounds(sys, n + 1.0, -x, SolutionClass::dominant(1), cert);
    bracket = br.previous;
  }
  Enclosure<double> e;
  e.lower = bracket.lo;
  e.upper = bracket.hi;
  if (!(n >= 0.5)) e.lower = -std::numeric_limits<double>::infinity();
  e.target = "-U'(n,x)/U(n,x)";
  e.provenance = "LG separators";
  return e;
}

/// log F_alpha(t) = -(t/2) sqrt(t^2/4 + alpha) - alpha asinh(t / (2 sqrt(alpha))),
/// the decaying form; minus the integral of sqrt(s^2/4 + alpha) over [0, t].
inline double log_f_alpha(double alpha, double t) {
  if (!(alpha >= 0)) throw DomainError("F_alpha: alpha must be >= 0");
  const double head = 0.5 * t * std::sqrt(0.25 * t * t + alpha);
  if (alpha == 0) return -head;
  return -head - alpha * std::asinh(t / (2.0 * std::sqrt(alpha)));
}

inline double f_alpha(double alpha, double t) { return std::exp(log_f_alpha(alpha, t)); }

struct PcfValueRatio {
  Enclosure<double> ratio;         // U(n,y)/U(n,x)
  Enclosure<double> normalized_x;  // U(n,x)/U(n,0)
  Enclosure<double> normalized_y;  // U(n,y)/U(n,0)
};

/// Bounds on U(n,y)/U(n,x) for 0 <= x <= y, from integrating the
/// log-derivative bracket:  F_{n+1/2}(y)/F_{n+1/2}(x) < ratio < F_{n-1/2}(y)/F_{n-1/2}(x).
inline PcfValueRatio pcf_value_ratio_bounds(double n, double x, double y) {
  if (!(n >= 0.5)) throw ValidityError("pcf value ratio: needs n >= 1/2, got n=" + detail::fmt(n));
  if (!(0 <= x && x <= y) || !std::isfinite(y)) {
    throw ValidityError("pcf value ratio: needs 0 <= x <= y, got x=" + detail::fmt(x) +
                        ", y=" + detail::fmt(y));
  }
  auto make = [&](double from, double to, const char* target) {
    Enclosure<double> e;
    e.lower = std::exp(log_f_alpha(n + 0.5, to) - log_f_alpha(n + 0.5, from));
    e.upper = std::exp(log_f_alpha(n - 0.5, to) - log_f_alpha(n - 0.5, from));
    e.target = target;
    e.provenance = "F_{n+1/2}/F_{n-1/2}";
    return e;
  };
  return {make(x, y, "U(n,y)/U(n,x)"), make(0.0, x, "U(n,x)/U(n,0)"),
          make(0.0, y, "U(n,y)/U(n,0)")};
}

// ---------------------------------------------------------------------------
// Hermite polynomials on the real axis: lower bounds on H_n(x)/H_{n-1}(x).
// Level k starts from x + sqrt(x^2 - 2(n-k)) at index n-k and applies
// h_m = 2x - 2(m-1)/h_{m-1} k times.

inline double hermite_validity_edge(int n, int level) {
  return std::sqrt(2.0 * (n - level));
}

namespace detail {

inline void check_hermite_args(int n, int level) {
  if (level < 0 || level > 3) throw DomainError("hermite-real: level must be 0..3");
  if (n <= level) {
    throw ValidityError("hermite-real: needs n > level (n=" + std::to_string(n) +
                        ", level=" + std::to_string(level) + ")");
  }
}

// Iterated lower bound; nullopt when an intermediate bound is not positive.
inline std::optional<double> hermite_iterate(int n, double x, int level) {
  const int base = n - level;
  const double disc = std::max(0.0, x * x - 2.0 * base);
  double v = x + std::sqrt(disc);
  for (int m = base + 1; m <= n; ++m) {
    if (!(v > 0)) return std::nullopt;
    v = 2.0 * x - 2.0 * (m - 1) / v;
  }
  return v;
}

}  // namespace detail

inline Bound<double> hermite_real_lower_bound(int n, double x, int level) {
  detail::check_hermite_args(n, level);
  const double edge = hermite_validity_edge(n, level);
  if (!(x >= edge)) {
    throw ValidityError("hermite-real level " + std::to_string(level) + ": needs x >= sqrt(2(n-" +
                        std::to_string(level) + ")) = " + detail::fmt(edge) + ", got x=" +
                        detail::fmt(x));
  }
  const auto v = detail::hermite_iterate(n, x, level);
  if (!v) {
    throw ValidityError("hermite-real level " + std::to_string(level) +
                        ": intermediate bound not positive at x=" + detail::fmt(x));
  }
  return detail::closed_lower(*v, "H_n/H_{n-1} level " + std::to_string(level));
}

// ---------------------------------------------------------------------------
// Laguerre polynomials on the real axis: lower bounds on 2n h_n with
// h_n = -L_n^a(x)/L_{n-1}^a(x). Level k starts at index n* = n-k from
// x - (2n*+a) + sqrt((x-2n*-a)^2 - 4n*(n*+a)) and applies
//   2m h_m = 2(x - 2m + 1 - a) - 2(m-1+a) 2(m-1) / (2(m-1) h_{m-1}).

inline double laguerre_validity_edge(int n, double alpha, int level) {
  const double ns = n - level;
  return 2.0 * ns + alpha + 2.0 * std::sqrt(ns * (ns + alpha));
}

namespace detail {

inline void check_laguerre_args(int n, double alpha, int level) {
  if (level < 0 || level > 2) throw DomainError("laguerre-real: level must be 0..2");
  if (!(alpha > -1)) throw ValidityError("laguerre-real: needs alpha > -1");
  if (n <= level) {
    throw ValidityError("laguerre-real: needs n > level (n=" + std::to_string(n) +
                        ", level=" + std::to_string(level) + ")");
  }
}

inline std::optional<double> laguerre_iterate(int n, double alpha, double x, int level) {
  const double ns = n - level;
  const double u = x - 2.0 * ns - alpha;
  const double disc = std::max(0.0, u * u - 4.0 * ns * (ns + alpha));
  double v = u + std::sqrt(disc);  // bound on 2 n* h_{n*}
  for (int m = n - level + 1; m <= n; ++m) {
    if (!(v > 0)) return std::nullopt;
    v = 2.0 * (x - 2.0 * m + 1.0 - alpha) - 4.0 * (m - 1) * (m - 1 + alpha) / v;
  }
  return v;
}

}  // namespace detail

/// Lower bound on 2n h_n^a(x) at the given level.
inline Bound<double> laguerre_real_lower_bound(int n, double alpha, double x, int level) {
  detail::check_laguerre_args(n, alpha, level);
  const double edge = laguerre_validity_edge(n, alpha, level);
  if (!(x >= edge)) {
    throw ValidityError("laguerre-real level " + std::to_string(level) +
                        ": needs x >= 2n*+a+2sqrt(n*(n*+a)) = " + detail::fmt(edge) +
                        ", got x=" + detail::fmt(x));
  }
  const auto v = detail::laguerre_iterate(n, alpha, x, level);
  if (!v) {
    throw ValidityError("laguerre-real level " + std::to_string(level) +
                        ": intermediate bound not positive at x=" + detail::fmt(x));
  }
  return detail::closed_lower(*v, "2n h_n level " + std::to_string(level));
}

// ---------------------------------------------------------------------------
// Largest zeros.

enum class ZeroFamily { Hermite, Laguerre };

struct ZeroBoundReport {
  ZeroFamily family = ZeroFamily::Hermite;
  int n = 0;
  std::optional<double> alpha;
  int level = 0;
  double bound = 0;  // left end of the level's validity region
  bool condition_satisfied = false;
  std::string condition_text;
  double condition_value = 0;  // lower bound evaluated at the edge
  // Laguerre only: the edge with the square root not doubled, and whether the
  // level's square root is real there.
  std::optional<double> printed_candidate;
  std::optional<bool> printed_candidate_in_region;
};

/// Upper bound for the largest zero of H_n or L_n^alpha from the level-k
/// lower bound: if that bound is non-negative at the validity edge x_k, then
/// h_n > 0 on [x_k, inf) and no zero lies there.
inline ZeroBoundReport largest_zero_upper_bound(ZeroFamily family, int n,
                                                std::optional<double> alpha, int level,
                                                bool throw_on_failure = false) {
  ZeroBoundReport rep;
  rep.family = family;
  rep.n = n;
  rep.alpha = alpha;
  rep.level = level;
  std::optional<double> at_edge;
  if (family == ZeroFamily::Hermite) {
    detail::check_hermite_args(n, level);
    rep.bound = hermite_validity_edge(n, level);
    at_edge = detail::hermite_iterate(n, rep.bound, level);
    rep.condition_text = "level-" + std::to_string(level) + " bound on H_n/H_{n-1} at x=sqrt(2(n-" +
                         std::to_string(level) + ")) is >= 0";
  } else {
    if (!alpha) throw DomainError("laguerre zero bound: alpha is required");
    detail::check_laguerre_args(n, *alpha, level);
    rep.bound = laguerre_validity_edge(n, *alpha, level);
    at_edge = detail::laguerre_iterate(n, *alpha, rep.bound, level);
    rep.condition_text = "level-" + std::to_string(level) +
                         " bound on 2n h_n at x*=2n*+a+2sqrt(n*(n*+a)) is >= 0";
    if (level == 1) {
      const double ns = n - 1;
      const double cand = 2.0 * n + *alpha - 2.0 + std::sqrt(ns * (ns + *alpha));
      const double u = cand - 2.0 * ns - *alpha;
      rep.printed_candidate = cand;
      rep.printed_candidate_in_region = u >= 0 && u * u - 4.0 * ns * (ns + *alpha) >= 0;
    }
  }
  rep.condition_value = at_edge.value_or(-std::numeric_limits<double>::infinity());
  // The edge value can be exactly zero (H_7 at level 3); zero still gives h_n > 0.
  const double tol = 64 * std::numeric_limits<double>::epsilon() * std::max(1.0, rep.bound);
  rep.condition_satisfied = at_edge.has_value() && *at_edge >= -tol;
  if (!rep.condition_satisfied && throw_on_failure) {
    throw ConditionFailedError(rep.condition_text + " fails: value " +
                               detail::fmt(rep.condition_value));
  }
  return rep;
}

}  // namespace ratio_bounds::families
