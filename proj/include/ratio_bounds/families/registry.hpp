#pragma once

// Family registry: descriptors addressable by name, ratio enclosures in each
// family's natural normalization, and Turán-type reports.

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ratio_bounds/bounds_engine.hpp"
#include "ratio_bounds/families/closed_forms.hpp"
#include "ratio_bounds/families/systems.hpp"
#include "ratio_bounds/params.hpp"
#include "ratio_bounds/recurrence_refiner.hpp"

namespace ratio_bounds::families {

struct ValidityRegion {
  std::string tag;
  std::string predicate;
  std::string x_interval;
  std::function<bool(const Params&, double x)> holds;
  // Points near the corners of the region, for oracle spot checks.
  std::vector<std::pair<Params, double>> corners;
};

struct Member {
  std::string name;
  SolutionClass cls;
};

struct ChainLink {
  std::string text;
  bool holds = false;
};

/// One Turán-type quantity of a family: its uniform constants, the pointwise
/// enclosure implied by the ratio bounds, and the printed chain of
/// inequalities evaluated at a value of the quantity.
struct TuranSpec {
  std::string id;
  std::string quantity;
  std::function<void(const Params&, double x)> require;
  std::function<Interval<double>(const Params&)> uniform;
  std::function<Enclosure<double>(const Params&, double x)> pointwise;
  std::function<std::vector<ChainLink>(const Params&, double value)> chain;
};

struct Sample {
  Params params;
  double x = 0;
  int depth = 0;
};

struct FamilyDescriptor {
  std::string name;
  std::string ratio_target;
  std::string index_map;
  std::string normalization;
  std::vector<std::string> required_params;
  std::function<CoefficientSystem<double>(const Params&)> system;
  std::vector<Member> members;
  std::vector<ValidityRegion> validity;
  std::vector<TuranSpec> turan;
  std::function<EnclosureSequence<double>(const Params&, double x, int depth, double rel_tol)>
      ratio;
  std::function<Sample(std::mt19937_64&)> sample;
};

namespace detail {

inline EnclosureSequence<double> single(Enclosure<double> e) {
  EnclosureSequence<double> seq;
  seq.final_width_rel = e.relative_width();
  seq.converged = false;
  seq.enclosures.push_back(std::move(e));
  return seq;
}

inline Enclosure<double> upper_only(const Bound<double>& b, double scale = 1.0) {
  Enclosure<double> e;
  e.lower = 0;
  e.upper = scale * b.value;
  e.provenance = b.provenance.to_string();
  return e;
}

inline Enclosure<double> lower_only(const Bound<double>& b, double scale = 1.0) {
  Enclosure<double> e;
  e.lower = scale * b.value;
  e.provenance = b.provenance.to_string();
  return e;
}

inline EnclosureSequence<double> with_target(EnclosureSequence<double> seq,
                                             const std::string& target) {
  for (auto& e : seq.enclosures) e.target = target;
  return seq;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Parameter values strictly inside an open window.
inline double inside(std::mt19937_64& rng, double lo, double hi) {
  const double pad = 1e-3 * (hi - lo);
  return uniform(rng, lo + pad, hi - pad);
}

inline int integer_param(const std::optional<double>& v, const char* key,
                         const std::string& family) {
  const double d = require_param(v, key, family);
  if (!is_integer(d)) {
    throw ValidityError(family + ": parameter '" + key + "' must be an integer, got " + fmt(d));
  }
  return static_cast<int>(d);
}

inline void require_x(bool ok, const std::string& family, const char* what, double x) {
  if (!ok) throw ValidityError(family + ": needs " + what + ", got x=" + fmt(x));
}

inline Certification<double> certification(
    std::function<std::optional<std::string>(double, double)> hyp) {
  Certification<double> c;
  c.root_direction = Direction::Increasing;
  c.hypothesis = std::move(hyp);
  return c;
}

// --- parabolic cylinder U ------------------------------------------------------

inline Certification<double> pcf_u_cert() {
  return certification([](double n, double x) -> std::optional<std::string> {
    if (!(n > 0.5)) return "n > 1/2";
    if (!(x >= 0)) return "x >= 0";
    return std::nullopt;
  });
}

inline EnclosureSequence<double> pcf_u_ratio(const Params& p, double x, int depth,
                                             double rel_tol) {
  const double n = require_param(p.n, "n", "pcf-u");
  if (!(n > 0.5)) throw ValidityError("pcf-u: needs n > 1/2, got n=" + fmt(n));
  require_x(std::isfinite(x), "pcf-u", "finite x", x);
  const auto sys = pcf_system<double>();
  const auto cert = pcf_u_cert();
  if (x >= 0) {
    return refine_enclosure(sys, n, x, SolutionClass::minimal(-1), depth, rel_tol, cert);
  }
  // U(n,x) for x < 0 is U(n,-t), a dominant solution in t = -x.
  const double t = -x;
  const auto cls = SolutionClass::dominant(1);
  if (n > 1.5) return single(pk_enclosure(sys, n, t, cls, cert));
  return single(upper_only(first_pk_bound(sys, n, t, cls, cert)));
}

// --- parabolic cylinder V / Gamma(n + 1/2) -------------------------------------

// n in (2k-1, 2k) for some integer k >= 1.
inline bool in_odd_window(double n) {
  if (!(n > 1) || is_integer(n)) return false;
  return static_cast<long long>(std::floor(n)) % 2 == 1;
}

inline bool in_even_window(double n) {
  if (!(n > 2) || is_integer(n)) return false;
  return static_cast<long long>(std::floor(n)) % 2 == 0;
}

inline Certification<double> pcf_v_cert() {
  return certification([](double n, double x) -> std::optional<std::string> {
    if (!in_odd_window(n)) return "n in (2k-1, 2k) for an integer k >= 1";
    if (!(x > 0)) return "x > 0";
    return std::nullopt;
  });
}

inline EnclosureSequence<double> pcf_v_ratio(const Params& p, double x, int, double) {
  const double n = require_param(p.n, "n", "pcf-v");
  require_x(x > 0 && std::isfinite(x), "pcf-v", "x > 0", x);
  const auto sys = pcf_system<double>();
  const auto cert = pcf_v_cert();
  const auto cls = SolutionClass::dominant(1);
  // y_n = V(n,x)/Gamma(n+1/2), so V(n,x)/V(n-1,x) = (n - 1/2) h_n.
  if (in_odd_window(n)) return single(upper_only(first_pk_bound(sys, n, x, cls, cert), n - 0.5));
  if (in_even_window(n)) {
    return single(lower_only(second_pk_bound_dominant(sys, n, x, cls, cert), n - 0.5));
  }
  throw ValidityError("pcf-v: needs n in (2k-1,2k) (upper) or (2k,2k+1) (lower), k >= 1; got n=" +
                      fmt(n));
}

// --- oblate Legendre ------------------------------------------------------------

inline Certification<double> oblate_q_cert(double m) {
  return certification([m](double n, double x) -> std::optional<std::string> {
    if (!(n > m)) return "n > m";
    if (!(x > 0)) return "x > 0";
    return std::nullopt;
  });
}

inline EnclosureSequence<double> oblate_q_ratio(const Params& p, double x, int depth,
                                                double rel_tol) {
  const double n = require_param(p.n, "n", "oblate-q");
  const double m = require_param(p.m, "m", "oblate-q");
  if (!(m > 0 && n > m)) {
    throw ValidityError("oblate-q: needs real n > m > 0, got n=" + fmt(n) + ", m=" + fmt(m));
  }
  require_x(x > 0 && std::isfinite(x), "oblate-q", "x > 0", x);
  return refine_enclosure(oblate_system<double>(m), n, x, SolutionClass::minimal(-1), depth,
                          rel_tol, oblate_q_cert(m));
}

inline Certification<double> oblate_p_cert(double m) {
  return certification([m](double n, double x) -> std::optional<std::string> {
    const double diff = n - m;
    if (!(diff > 0) || !is_integer(diff) || static_cast<long long>(diff) % 2 == 0) {
      return "n - m a positive odd integer";
    }
    if (!(x > 0)) return "x > 0";
    return std::nullopt;
  });
}

inline EnclosureSequence<double> oblate_p_ratio(const Params& p, double x, int, double) {
  const int n = integer_param(p.n, "n", "oblate-p");
  const int m = integer_param(p.m, "m", "oblate-p");
  if (!(m >= 0 && n > m)) {
    throw ValidityError("oblate-p: needs integers n > m >= 0, got n=" + std::to_string(n) +
                        ", m=" + std::to_string(m));
  }
  require_x(x > 0 && std::isfinite(x), "oblate-p", "x > 0", x);
  const auto sys = oblate_system<double>(m);
  const auto cert = oblate_p_cert(m);
  const auto cls = SolutionClass::dominant(1);
  if ((n - m) % 2 == 1) return single(upper_only(first_pk_bound<double>(sys, n, x, cls, cert)));
  return single(lower_only(second_pk_bound_dominant<double>(sys, n, x, cls, cert)));
}

// --- Laguerre of negative argument ----------------------------------------------

inline Certification<double> laguerre_neg_cert(double sigma) {
  return certification([sigma](double idx, double x) -> std::optional<std::string> {
    const double nu = idx - 1.0;
    const double alpha = sigma - nu;
    if (!(alpha > 0)) return "alpha > 0";
    if (!(nu > -1)) return "nu > -1";
    if (!(x > 0)) return "x > 0";
    return std::nullopt;
  });
}

// Enclosure of L_{nu+1}^{alpha-1}(-x)/L_nu^alpha(-x); one-sided when only
// one of the two theorems applies.
inline Enclosure<double> laguerre_neg_enclosure(double nu, double alpha, double x) {
  if (!(x > 0 && std::isfinite(x))) throw ValidityError("laguerre-neg: needs x > 0, got x=" + fmt(x));
  const bool upper_ok = alpha > 0 && nu > -1;
  const bool lower_ok = alpha > -1 && nu > 0;
  if (!upper_ok && !lower_ok) {
    throw ValidityError("laguerre-neg: needs (alpha > 0, nu > -1) or (alpha > -1, nu > 0), got nu=" +
                        fmt(nu) + ", alpha=" + fmt(alpha));
  }
  const double sigma = nu + alpha;
  const auto sys = laguerre_negative_system<double>(sigma);
  const auto cert = laguerre_neg_cert(sigma);
  const auto cls = SolutionClass::dominant(1);
  const double idx = nu + 1.0;
  if (upper_ok && lower_ok) return pk_enclosure(sys, idx, x, cls, cert);
  if (upper_ok) return upper_only(first_pk_bound(sys, idx, x, cls, cert));
  if (alpha + x >= 0) return lower_only(second_pk_bound_dominant(sys, idx, x, cls, cert));
  // For alpha + x < 0 the generic class test s*eta_bar_nu <= 0 fails, but the
  // lower bound still holds for alpha > -1, nu > 0. Same expression, evaluated
  // directly. Both it and the ratio itself (through 1/Gamma(alpha)) can be
  // negative here, so the lower end is signed.
  const double v = (alpha + x - 1 + std::sqrt((alpha + x + 1) * (alpha + x + 1) + 4 * nu * x)) /
                   (2 * (nu + 1));
  return lower_only(closed_lower(v, "laguerre-neg lower bound, alpha + x < 0"));
}

inline EnclosureSequence<double> laguerre_neg_ratio(const Params& p, double x, int, double) {
  const double nu = require_param(p.nu, "nu", "laguerre-neg");
  const double alpha = require_param(p.alpha, "alpha", "laguerre-neg");
  return single(laguerre_neg_enclosure(nu, alpha, x));
}

// --- modified Bessel --------------------------------------------------------------

inline Certification<double> bessel_cert() {
  return certification([](double n, double x) -> std::optional<std::string> {
    if (!(n >= 0.5)) return "n >= 1/2";
    if (!(x > 0)) return "x > 0";
    return std::nullopt;
  });
}

inline EnclosureSequence<double> bessel_i_ratio(const Params& p, double x, int depth,
                                                double rel_tol) {
  const double n = require_param(p.n, "n", "bessel-i");
  if (!(n >= 0.5)) throw ValidityError("bessel-i: needs n >= 1/2, got n=" + fmt(n));
  require_x(x > 0 && std::isfinite(x), "bessel-i", "x > 0", x);
  return refine_enclosure(bessel_i_system<double>(), n, x, SolutionClass::minimal(1), depth,
                          rel_tol, bessel_cert());
}

inline EnclosureSequence<double> bessel_k_ratio(const Params& p, double x, int, double) {
  const double n = require_param(p.n, "n", "bessel-k");
  if (!(n >= 0.5)) throw ValidityError("bessel-k: needs n >= 1/2, got n=" + fmt(n));
  require_x(x > 0 && std::isfinite(x), "bessel-k", "x > 0", x);
  const auto sys = sign_normalized(bessel_k_raw_system<double>());
  const auto cls = SolutionClass::dominant(-1);
  if (n >= 1.5) return single(pk_enclosure(sys, n, x, cls, bessel_cert()));
  return single(upper_only(first_pk_bound(sys, n, x, cls, bessel_cert())));
}

// --- real-axis orthogonal polynomials --------------------------------------------

inline EnclosureSequence<double> hermite_real_ratio(const Params& p, double x, int depth, double) {
  const int n = integer_param(p.n, "n", "hermite-real");
  if (n < 1) throw ValidityError("hermite-real: needs n >= 1");
  Enclosure<double> e = lower_only(hermite_real_lower_bound(n, x, depth));
  e.provenance = "ClosedForm(level " + std::to_string(depth) + ")";
  return single(e);
}

inline EnclosureSequence<double> laguerre_real_ratio(const Params& p, double x, int depth,
                                                     double) {
  const int n = integer_param(p.n, "n", "laguerre-real");
  const double alpha = require_param(p.alpha, "alpha", "laguerre-real");
  if (n < 1) throw ValidityError("laguerre-real: needs n >= 1");
  Enclosure<double> e = lower_only(laguerre_real_lower_bound(n, alpha, x, depth), 0.5 / n);
  e.provenance = "ClosedForm(level " + std::to_string(depth) + ")";
  return single(e);
}

// --- Turán helpers ---------------------------------------------------------------

inline ChainLink link(std::string text, bool holds) { return {std::move(text), holds}; }

// Ratio enclosure that degrades to [0, inf) outside the certified region.
inline Enclosure<double> enclosure_or_trivial(
    const std::function<EnclosureSequence<double>()>& make) {
  try {
    return make().last();
  } catch (const ValidityError&) {
    return Enclosure<double>{};
  }
}

// Enclosure of a / b from enclosures of a and b (both positive).
inline Enclosure<double> quotient(const Enclosure<double>& a, const Enclosure<double>& b) {
  Enclosure<double> out;
  out.lower = std::isinf(b.upper) ? 0.0 : a.lower / b.upper;
  out.upper = b.lower > 0 && std::isfinite(a.upper) ? a.upper / b.lower
                                                    : std::numeric_limits<double>::infinity();
  out.provenance = "(" + a.provenance + ")/(" + b.provenance + ")";
  return out;
}

inline Enclosure<double> shifted(const Enclosure<double>& e, double c) {
  Enclosure<double> out = e;
  out.lower = e.lower + c;
  out.upper = e.upper + c;
  return out;
}

}  // namespace detail

namespace detail {

inline FamilyDescriptor make_pcf_u() {
  FamilyDescriptor f;
  f.name = "pcf-u";
  f.ratio_target = "U(n,x)/U(n-1,x)";
  f.index_map = "system index = n";
  f.normalization = "y_n = e^{i pi n} U(n,x); for x < 0 the member U(n,-t) in t = -x";
  f.required_params = {"n"};
  f.system = [](const Params&) { return pcf_system<double>(); };
  f.members = {{"U(n,x)", SolutionClass::minimal(-1)}, {"U(n,-x)", SolutionClass::dominant(1)}};
  f.validity = {
      {"U ratio, x >= 0", "n > 1/2", "[0, inf)",
       [](const Params& p, double x) { return p.n && *p.n > 0.5 && x >= 0; },
       {{Params::with_n(0.51), 0.0}, {Params::with_n(0.51), 30.0}, {Params::with_n(60.0), 0.0},
        {Params::with_n(60.0), 30.0}}},
      {"U ratio, x < 0 (two-sided)", "n > 3/2", "(-inf, 0)",
       [](const Params& p, double x) { return p.n && *p.n > 1.5 && x < 0; },
       {{Params::with_n(1.51), -1e-3}, {Params::with_n(1.51), -8.0},
        {Params::with_n(40.0), -1e-3}, {Params::with_n(40.0), -8.0}}},
      {"U ratio, x < 0 (upper only)", "1/2 < n <= 3/2", "(-inf, 0)",
       [](const Params& p, double x) { return p.n && *p.n > 0.5 && *p.n <= 1.5 && x < 0; },
       {{Params::with_n(0.51), -1e-3}, {Params::with_n(1.5), -8.0}}},
  };
  f.ratio = pcf_u_ratio;
  f.sample = [](std::mt19937_64& rng) {
    Sample s;
    s.x = uniform(rng, -6.0, 20.0);
    s.params = Params::with_n(s.x < 0 ? uniform(rng, 0.55, 30.0) : uniform(rng, 0.51, 50.0));
    s.depth = uniform_int(rng, 0, 12);
    return s;
  };
  TuranSpec t;
  t.id = "pcf-u";
  t.quantity = "U(n,x)^2/(U(n-1,x) U(n+1,x))";
  t.require = [](const Params& p, double x) {
    const double n = require_param(p.n, "n", "pcf-u");
    if (!(n > 0.5)) throw ValidityError("pcf-u Turán: needs n > 1/2");
    require_x(std::isfinite(x), "pcf-u", "finite x", x);
  };
  t.uniform = [](const Params& p) {
    const double n = *p.n;
    return Interval<double>::open(1.0, std::sqrt((n + 1.5) / (n - 0.5)));
  };
  t.pointwise = [](const Params& p, double x) {
    const double n = *p.n;
    const int depth = x >= 0 ? 8 : 0;
    auto at = [&](double k) {
      return enclosure_or_trivial(
          [&] { return pcf_u_ratio(Params::with_n(k), x, depth, kDefaultRelTol); });
    };
    return turan_enclosure(at(n), at(n + 1.0));
  };
  t.chain = [](const Params& p, double F) {
    const double n = *p.n;
    const double k = (n - 0.5) / (n + 0.5);
    std::vector<ChainLink> out;
    if (n > 1.5) {
      out.push_back(link("sqrt((n-3/2)/(n+1/2)) < (n-1/2)/(n+1/2) F",
                         std::sqrt((n - 1.5) / (n + 0.5)) < k * F));
    }
    out.push_back(link("(n-1/2)/(n+1/2) F < 1", k * F < 1.0));
    out.push_back(link("1 < F", 1.0 < F));
    out.push_back(link("F < sqrt((n+3/2)/(n-1/2))", F < std::sqrt((n + 1.5) / (n - 0.5))));
    return out;
  };
  f.turan.push_back(std::move(t));
  return f;
}

inline FamilyDescriptor make_pcf_v() {
  FamilyDescriptor f;
  f.name = "pcf-v";
  f.ratio_target = "V(n,x)/V(n-1,x)";
  f.index_map = "system index = n; Turán reports read n as the Hermite index k";
  f.normalization = "y_n = V(n,x)/Gamma(n+1/2); Hermite polynomials of imaginary argument "
                    "through i^{-n} H_n(ix)";
  f.required_params = {"n"};
  f.system = [](const Params&) { return pcf_system<double>(); };
  f.members = {{"V(n,x)/Gamma(n+1/2)", SolutionClass::dominant(1)}};
  f.validity = {
      {"V ratio upper bound", "n in (2k-1, 2k), k >= 1", "(0, inf)",
       [](const Params& p, double x) { return p.n && in_odd_window(*p.n) && x > 0; },
       {{Params::with_n(1.001), 1e-3}, {Params::with_n(1.999), 1e-3}, {Params::with_n(1.001), 15.0},
        {Params::with_n(5.999), 15.0}}},
      {"V ratio lower bound", "n in (2k, 2k+1), k >= 1", "(0, inf)",
       [](const Params& p, double x) { return p.n && in_even_window(*p.n) && x > 0; },
       {{Params::with_n(2.001), 1e-3}, {Params::with_n(2.999), 1e-3}, {Params::with_n(2.001), 15.0},
        {Params::with_n(6.999), 15.0}}},
  };
  f.ratio = pcf_v_ratio;
  f.sample = [](std::mt19937_64& rng) {
    Sample s;
    const int k = uniform_int(rng, 1, 6);
    const bool upper = uniform_int(rng, 0, 1) == 0;
    const double base = upper ? 2.0 * k - 1.0 : 2.0 * k;
    s.params = Params::with_n(inside(rng, base, base + 1.0));
    s.x = uniform(rng, 0.05, 15.0);
    return s;
  };
  TuranSpec t;
  t.id = "hermite-imag";
  t.quantity = "H_2k(ix)^2/(H_{2k-1}(ix) H_{2k+1}(ix)), k = n";
  t.require = [](const Params& p, double x) {
    const int k = integer_param(p.n, "n", "pcf-v");
    if (k < 1) throw ValidityError("pcf-v Turán: needs integer k = n >= 1");
    require_x(std::isfinite(x) && x != 0, "pcf-v Turán", "x != 0", x);
  };
  t.uniform = [](const Params& p) {
    const double k = *p.n;
    return Interval<double>::open(std::sqrt((k - 0.5) / (k + 0.5)),
                                  std::numeric_limits<double>::infinity());
  };
  t.pointwise = [](const Params& p, double x) {
    // The quantity is even in x; the ratio bounds hold for x > 0.
    const double k = *p.n;
    const double a = std::fabs(x);
    Enclosure<double> e;
    e.lower = (a + std::sqrt(4 * k - 2 + a * a)) / (a + std::sqrt(4 * k + 2 + a * a));
    e.provenance = "hermite-imag ratio bounds";
    return e;
  };
  t.chain = [](const Params& p, double v) {
    const double k = *p.n;
    return std::vector<ChainLink>{
        link("Q > sqrt((k-1/2)/(k+1/2))", v > std::sqrt((k - 0.5) / (k + 0.5)))};
  };
  f.turan.push_back(std::move(t));
  return f;
}

inline FamilyDescriptor make_mills() {
  FamilyDescriptor f;
  f.name = "mills";
  f.ratio_target = "r(x) = U(1/2,x)/U(-1/2,x)";
  f.index_map = "pcf system at n = 1/2";
  f.normalization = "r(x) = e^{x^2/2} int_x^inf e^{-t^2/2} dt";
  f.system = [](const Params&) { return pcf_system<double>(); };
  f.members = {{"U(n,x)", SolutionClass::minimal(-1)}};
  f.validity = {{"Mills continued fraction", "none", "[0, inf)",
                 [](const Params&, double x) { return x >= 0; },
                 {{Params{}, 0.0}, {Params{}, 30.0}}}};
  f.ratio = [](const Params&, double x, int depth, double) {
    return mills_bounds(x, std::max(depth, 1));
  };
  f.sample = [](std::mt19937_64& rng) {
    Sample s;
    s.x = uniform(rng, 0.0, 12.0);
    s.depth = uniform_int(rng, 1, 8);
    return s;
  };
  return f;
}

inline FamilyDescriptor make_ierfc() {
  FamilyDescriptor f;
  f.name = "ierfc";
  f.ratio_target = "i^n erfc(x)/i^(n-1) erfc(x)";
  f.index_map = "pcf system at index n + 1/2";
  f.normalization = "i^n erfc(x) proportional to U(n+1/2, sqrt(2) x) e^{-x^2/2}";
  f.required_params = {"n"};
  f.system = [](const Params&) { return pcf_system<double>(); };
  f.members = {{"U(n+1/2,x)", SolutionClass::minimal(-1)}};
  f.validity = {{"iterated erfc ratio", "integer n >= 1", "[0, inf)",
                 [](const Params& p, double x) { return p.n && is_integer(*p.n) && *p.n >= 1 && x >= 0; },
                 {{Params::with_n(1), 0.0}, {Params::with_n(1), 20.0}, {Params::with_n(12), 0.0},
                  {Params::with_n(12), 20.0}}}};
  f.ratio = [](const Params& p, double x, int, double) {
    const int n = integer_param(p.n, "n", "ierfc");
    return single(iterated_erfc_ratio_bounds(n, x));
  };
  f.sample = [](std::mt19937_64& rng) {
    Sample s;
    s.params = Params::with_n(uniform_int(rng, 1, 10));
    s.x = uniform(rng, 0.0, 10.0);
    return s;
  };
  return f;
}

inline FamilyDescriptor make_oblate_q() {
  FamilyDescriptor f;
  f.name = "oblate-q";
  f.ratio_target = "i Q_n^m(ix)/Q_{n-1}^m(ix)";
  f.index_map = "system index = n, order m";
  f.normalization = "q_n(x) = Q_n^m(ix); h_n = -i Q_n^m(ix)/Q_{n-1}^m(ix) < 0";
  f.required_params = {"n", "m"};
  f.system = [](const Params& p) { return oblate_system<double>(require_param(p.m, "m", "oblate-q")); };
  f.members = {{"Q_n^m(ix)", SolutionClass::minimal(-1)}};
  f.validity = {{"oblate Q ratio", "real n > m > 0", "(0, inf)",
                 [](const Params& p, double x) {
                   return p.n && p.m && *p.m > 0 && *p.n > *p.m && x > 0;
                 },
                 {{Params::n_m(0.21, 0.2), 1e-3}, {Params::n_m(0.21, 0.2), 20.0},
                  {Params::n_m(30.0, 0.2), 1e-3}, {Params::n_m(30.0, 4.0), 20.0}}}};
  f.ratio = oblate_q_ratio;
  f.sample = [](std::mt19937_64& rng) {
    Sample s;
    const double m = uniform(rng, 0.1, 5.0);
    s.params = Params::n_m(m + uniform(rng, 0.05, 20.0), m);
    s.x = uniform(rng, 0.01, 10.0);
    s.depth = uniform_int(rng, 0, 12);
    return s;
  };
  TuranSpec t;
  t.id = "oblate-q";
  t.quantity = "Q_n^m(ix)^2/(Q_{n-1}^m(ix) Q_{n+1}^m(ix))";
  t.require = [](const Params& p, double x) {
    const double n = require_param(p.n, "n", "oblate-q");
    const double m = require_param(p.m, "m", "oblate-q");
    if (!(m > 0 && n > m)) throw ValidityError("oblate-q Turán: needs n > m > 0");
    require_x(x > 0 && std::isfinite(x), "oblate-q", "x > 0", x);
  };
  t.uniform = [](const Params& p) {
    const double n = *p.n, m = *p.m;
    const double c = (n + m) / (n + m + 1);
    return Interval<double>::open(c, c * std::sqrt(((n + 2) * (n + 2) - m * m) / (n * n - m * m)));
  };
  t.pointwise = [](const Params& p, double x) {
    auto at = [&](double k) {
      return oblate_q_ratio(Params::n_m(k, *p.m), x, 8, kDefaultRelTol).last();
    };
    return turan_enclosure(at(*p.n), at(*p.n + 1));
  };
  t.chain = [](const Params& p, double T) {
    const double n = *p.n, m = *p.m;
    const double c = (n + m + 1) / (n + m);
    return std::vector<ChainLink>{
        link("1 < (n+m+1)/(n+m) T", 1.0 < c * T),
        link("(n+m+1)/(n+m) T < sqrt(((n+2)^2-m^2)/(n^2-m^2))",
             c * T < std::sqrt(((n + 2) * (n + 2) - m * m) / (n * n - m * m)))};
  };
  f.turan.push_back(std::move(t));
  return f;
}

inline FamilyDescriptor make_oblate_p() {
  FamilyDescriptor f;
  f.name = "oblate-p";
  f.ratio_target = "-i P_n^m(ix)/P_{n-1}^m(ix)";
  f.index_map = "system index = n, order m";
  f.normalization = "p_n(x) = e^{-i n pi/2} P_n^m(ix), a real sequence";
  f.required_params = {"n", "m"};
  f.system = [](const Params& p) { return oblate_system<double>(require_param(p.m, "m", "oblate-p")); };
  f.members = {{"e^{-i n pi/2} P_n^m(ix)", SolutionClass::dominant(1)}};
  f.validity = {
      {"oblate P upper bound", "integers n > m >= 0, n - m odd", "(0, inf)",
       [](const Params& p, double x) {
         return p.n && p.m && is_integer(*p.n) && is_integer(*p.m) && *p.m >= 0 && *p.n > *p.m &&
                static_cast<long long>(*p.n - *p.m) % 2 == 1 && x > 0;
       },
       {{Params::n_m(1, 0), 1e-3}, {Params::n_m(1, 0), 20.0}, {Params::n_m(20, 3), 1e-3},
        {Params::n_m(20, 3), 20.0}}},
      {"oblate P lower bound", "integers n > m >= 0, n - m even", "(0, inf)",
       [](const Params& p, double x) {
         return p.n && p.m && is_integer(*p.n) && is_integer(*p.m) && *p.m >= 0 && *p.n > *p.m &&
                static_cast<long long>(*p.n - *p.m) % 2 == 0 && x > 0;
       },
       {{Params::n_m(2, 0), 1e-3}, {Params::n_m(2, 0), 20.0}, {Params::n_m(21, 3), 1e-3},
        {Params::n_m(21, 3), 20.0}}},
  };
  f.ratio = oblate_p_ratio;
  f.sample = [](std::mt19937_64& rng) {
    Sample s;
    const int m = uniform_int(rng, 0, 4);
    s.params = Params::n_m(m + uniform_int(rng, 1, 15), m);
    s.x = uniform(rng, 0.01, 10.0);
    return s;
  };
  TuranSpec t;
  t.id = "oblate-p";
  t.quantity = "P_n^m(ix)^2/(P_{n-1}^m(ix) P_{n+1}^m(ix))";
  t.require = [](const Params& p, double x) {
    const int n = integer_param(p.n, "n", "oblate-p");
    const int m = integer_param(p.m, "m", "oblate-p");
    if (!(m >= 0 && n > m && (n - m) % 2 == 1)) {
      throw ValidityError("oblate-p Turán: needs integers n > m >= 0 with n - m odd");
    }
    require_x(x > 0 && std::isfinite(x), "oblate-p", "x > 0", x);
  };
  t.uniform = [](const Params& p) {
    return Interval<double>::open(0.0, 1.0 + 1.0 / (*p.n - *p.m));
  };
  t.pointwise = [](const Params& p, double x) {
    auto at = [&](double k) { return oblate_p_ratio(Params::n_m(k, *p.m), x, 0, 0).last(); };
    return turan_enclosure(at(*p.n), at(*p.n + 1));
  };
  t.chain = [](const Params& p, double T) {
    return std::vector<ChainLink>{link("T < 1 + 1/(n-m)", T < 1.0 + 1.0 / (*p.n - *p.m))};
  };
  f.turan.push_back(std::move(t));
  return f;
}

inline FamilyDescriptor make_laguerre_neg() {
  FamilyDescriptor f;
  f.name = "laguerre-neg";
  f.ratio_target = "L_{nu+1}^{alpha-1}(-x)/L_nu^alpha(-x)";
  f.index_map = "system index n = nu + 1 along the line nu + alpha = const";
  f.normalization = "y_n = L_n^{sigma-n}(-x), sigma = nu + alpha";
  f.required_params = {"nu", "alpha"};
  f.system = [](const Params& p) {
    return laguerre_negative_system<double>(require_param(p.nu, "nu", "laguerre-neg") +
                                            require_param(p.alpha, "alpha", "laguerre-neg"));
  };
  f.members = {{"L_nu^alpha(-x)", SolutionClass::dominant(1)}};
  f.validity = {
      {"Laguerre upper bound", "alpha > 0, nu > -1", "(0, inf)",
       [](const Params& p, double x) { return p.nu && p.alpha && *p.alpha > 0 && *p.nu > -1 && x > 0; },
       {{Params::nu_alpha(-0.99, 0.01), 1e-3}, {Params::nu_alpha(-0.99, 0.01), 30.0},
        {Params::nu_alpha(20.0, 20.0), 1e-3}, {Params::nu_alpha(20.0, 20.0), 30.0}}},
      {"Laguerre lower bound", "alpha > -1, nu > 0", "(0, inf)",
       [](const Params& p, double x) { return p.nu && p.alpha && *p.alpha > -1 && *p.nu > 0 && x > 0; },
       {{Params::nu_alpha(0.01, -0.99), 1e-3}, {Params::nu_alpha(0.01, -0.99), 30.0},
        {Params::nu_alpha(20.0, 20.0), 1e-3}, {Params::nu_alpha(20.0, -0.5), 30.0}}},
  };
  f.ratio = laguerre_neg_ratio;
  f.sample = [](std::mt19937_64& rng) {
    Sample s;
    // Two thirds inside both regions, the rest in the one-sided strips.
    switch (uniform_int(rng, 0, 5)) {
      case 0: s.params = Params::nu_alpha(uniform(rng, -0.98, 0.0), uniform(rng, 0.02, 10.0)); break;
      case 1: s.params = Params::nu_alpha(uniform(rng, 0.02, 10.0), uniform(rng, -0.98, 0.0)); break;
      default: s.params = Params::nu_alpha(uniform(rng, 0.02, 10.0), uniform(rng, 0.02, 10.0));
    }
    s.x = uniform(rng, 0.01, 20.0);
    return s;
  };

  TuranSpec t1;
  t1.id = "laguerre-neg";
  t1.quantity = "L_{nu+1}^{alpha-1}(-x) L_{nu-1}^{alpha+1}(-x) / L_nu^alpha(-x)^2";
  t1.require = [](const Params& p, double x) {
    const double nu = require_param(p.nu, "nu", "laguerre-neg");
    const double alpha = require_param(p.alpha, "alpha", "laguerre-neg");
    if (!(nu >= 0 && alpha >= 0)) throw ValidityError("laguerre-neg Turán: needs nu >= 0, alpha >= 0");
    require_x(x > 0 && std::isfinite(x), "laguerre-neg", "x > 0", x);
  };
  t1.uniform = [](const Params& p) {
    const double nu = *p.nu, a = *p.alpha;
    return Interval<double>::open(nu / (nu + 1) * a / (a + 1), nu / (nu + 1));
  };
  t1.pointwise = [](const Params& p, double x) {
    const double nu = *p.nu, a = *p.alpha;
    auto at = [&](double v, double al) {
      return enclosure_or_trivial([&] { return single(laguerre_neg_enclosure(v, al, x)); });
    };
    // h(nu, alpha) / h(nu-1, alpha+1).
    return quotient(at(nu, a), at(nu - 1, a + 1));
  };
  t1.chain = [](const Params& p, double P) {
    const double nu = *p.nu, a = *p.alpha;
    return std::vector<ChainLink>{
        link("nu/(nu+1) alpha/(alpha+1) < P", nu / (nu + 1) * a / (a + 1) < P),
        link("P < nu/(nu+1)", P < nu / (nu + 1))};
  };
  f.turan.push_back(std::move(t1));

  TuranSpec t2;
  t2.id = "laguerre-neg-2";
  t2.quantity = "L_{nu-1}^alpha(-x) L_{nu+1}^alpha(-x) / L_nu^alpha(-x)^2";
  t2.require = [](const Params& p, double x) {
    const double nu = require_param(p.nu, "nu", "laguerre-neg");
    const double alpha = require_param(p.alpha, "alpha", "laguerre-neg");
    if (!(nu > 0 && alpha > -1)) throw ValidityError("laguerre-neg Turán: needs nu > 0, alpha > -1");
    require_x(x > 0 && std::isfinite(x), "laguerre-neg", "x > 0", x);
  };
  t2.uniform = [](const Params& p) {
    const double nu = *p.nu, a = *p.alpha;
    const double hi = nu + a > 1 ? nu / (nu + 1) * (nu + a + 1) / (nu + a - 1)
                                 : std::numeric_limits<double>::infinity();
    return Interval<double>::open(nu / (nu + 1), hi);
  };
  t2.pointwise = [](const Params& p, double x) {
    // L_{nu+1}^alpha / L_nu^alpha = 1 + h(nu, alpha), so the quantity is
    // (1 + h(nu, alpha)) / (1 + h(nu-1, alpha)).
    const double nu = *p.nu, a = *p.alpha;
    auto at = [&](double v) {
      return shifted(
          enclosure_or_trivial([&] { return single(laguerre_neg_enclosure(v, a, x)); }), 1.0);
    };
    return quotient(at(nu), at(nu - 1));
  };
  t2.chain = [](const Params& p, double P) {
    const double nu = *p.nu, a = *p.alpha;
    std::vector<ChainLink> out{link("nu/(nu+1) < P", nu / (nu + 1) < P)};
    if (nu + a > 1) {
      out.push_back(link("P < nu/(nu+1) (nu+alpha+1)/(nu+alpha-1)",
                         P < nu / (nu + 1) * (nu + a + 1) / (nu + a - 1)));
    }
    return out;
  };
  f.turan.push_back(std::move(t2));
  return f;
}

inline TuranSpec bessel_turan(const std::string& id, const std::string& fam) {
  TuranSpec t;
  t.id = id;
  t.quantity = id == "bessel-i" ? "I_n(x)^2/(I_{n-1}(x) I_{n+1}(x))"
                                : "K_n(x)^2/(K_{n-1}(x) K_{n+1}(x))";
  t.require = [fam](const Params& p, double x) {
    const double n = require_param(p.n, "n", fam);
    if (!(n >= 0.5)) throw ValidityError(fam + " Turán: needs n >= 1/2");
    require_x(x > 0 && std::isfinite(x), fam, "x > 0", x);
  };
  t.uniform = [](const Params&) { return Interval<double>::everything(); };
  t.pointwise = [id](const Params& p, double x) {
    auto at = [&](double k) {
      return enclosure_or_trivial([&] {
        return id == "bessel-i" ? bessel_i_ratio(Params::with_n(k), x, 8, kDefaultRelTol)
                                : bessel_k_ratio(Params::with_n(k), x, 0, 0);
      });
    };
    return turan_enclosure(at(*p.n), at(*p.n + 1));
  };
  t.chain = [](const Params&, double) { return std::vector<ChainLink>{}; };
  return t;
}

inline FamilyDescriptor make_bessel_i() {
  FamilyDescriptor f;
  f.name = "bessel-i";
  f.ratio_target = "I_n(x)/I_{n-1}(x)";
  f.index_map = "system index = n";
  f.normalization = "y_n = I_n(x)";
  f.required_params = {"n"};
  f.system = [](const Params&) { return bessel_i_system<double>(); };
  f.members = {{"I_n(x)", SolutionClass::minimal(1)}};
  f.validity = {{"I ratio", "n >= 1/2", "(0, inf)",
                 [](const Params& p, double x) { return p.n && *p.n >= 0.5 && x > 0; },
                 {{Params::with_n(0.5), 1e-3}, {Params::with_n(0.5), 40.0}, {Params::with_n(60.0), 1e-3},
                  {Params::with_n(60.0), 40.0}}}};
  f.ratio = bessel_i_ratio;
  f.sample = [](std::mt19937_64& rng) {
    Sample s;
    s.params = Params::with_n(uniform(rng, 0.5, 30.0));
    s.x = uniform(rng, 0.01, 30.0);
    s.depth = uniform_int(rng, 0, 12);
    return s;
  };
  f.turan.push_back(bessel_turan("bessel-i", "bessel-i"));
  return f;
}

inline FamilyDescriptor make_bessel_k() {
  FamilyDescriptor f;
  f.name = "bessel-k";
  f.ratio_target = "K_n(x)/K_{n-1}(x)";
  f.index_map = "system index = n";
  f.normalization = "y_n = (-1)^n K_n(x) (K has d = e = -1; sign-normalized)";
  f.required_params = {"n"};
  f.system = [](const Params&) { return sign_normalized(bessel_k_raw_system<double>()); };
  f.members = {{"(-1)^n K_n(x)", SolutionClass::dominant(-1)}};
  f.validity = {
      {"K ratio two-sided", "n >= 3/2", "(0, inf)",
       [](const Params& p, double x) { return p.n && *p.n >= 1.5 && x > 0; },
       {{Params::with_n(1.5), 1e-3}, {Params::with_n(1.5), 40.0}, {Params::with_n(60.0), 1e-3},
        {Params::with_n(60.0), 40.0}}},
      {"K ratio upper only", "1/2 <= n < 3/2", "(0, inf)",
       [](const Params& p, double x) { return p.n && *p.n >= 0.5 && *p.n < 1.5 && x > 0; },
       {{Params::with_n(0.5), 1e-3}, {Params::with_n(1.49), 40.0}}},
  };
  f.ratio = bessel_k_ratio;
  f.sample = [](std::mt19937_64& rng) {
    Sample s;
    s.params = Params::with_n(uniform(rng, 0.5, 30.0));
    s.x = uniform(rng, 0.01, 30.0);
    return s;
  };
  f.turan.push_back(bessel_turan("bessel-k", "bessel-k"));
  return f;
}

inline FamilyDescriptor make_hermite_real() {
  FamilyDescriptor f;
  f.name = "hermite-real";
  f.ratio_target = "H_n(x)/H_{n-1}(x)";
  f.index_map = "system index = n; depth selects the level 0..3";
  f.normalization = "y_n = H_n(x); lower bounds only";
  f.required_params = {"n"};
  f.system = [](const Params&) { return hermite_system<double>(); };
  f.members = {{"H_n(x)", SolutionClass::dominant(1)}};
  for (int level = 0; level <= 3; ++level) {
    const int nmin = level + 1;
    f.validity.push_back(
        {"Hermite level " + std::to_string(level), "integer n > " + std::to_string(level),
         "[sqrt(2(n-" + std::to_string(level) + ")), inf)",
         [level](const Params& p, double x) {
           return p.n && is_integer(*p.n) && *p.n > level && x >= hermite_validity_edge(int(*p.n), level);
         },
         {{Params::with_n(nmin + 3), hermite_validity_edge(nmin + 3, level)},
          {Params::with_n(30), hermite_validity_edge(30, level)},
          {Params::with_n(30), hermite_validity_edge(30, level) + 10}}});
  }
  f.ratio = hermite_real_ratio;
  f.sample = [](std::mt19937_64& rng) {
    Sample s;
    // Level 3 needs the intermediate bound positive; n >= 7 keeps it so at the edge.
    s.depth = uniform_int(rng, 0, 3);
    const int n = uniform_int(rng, s.depth == 3 ? 7 : s.depth + 1, 30);
    s.params = Params::with_n(n);
    s.x = hermite_validity_edge(n, s.depth) + uniform(rng, 0.0, 10.0);
    return s;
  };
  return f;
}

inline FamilyDescriptor make_laguerre_real() {
  FamilyDescriptor f;
  f.name = "laguerre-real";
  f.ratio_target = "-L_n^alpha(x)/L_{n-1}^alpha(x)";
  f.index_map = "system index = n; depth selects the level 0..2";
  f.normalization = "y_n = (-1)^n L_n^alpha(x); lower bounds only";
  f.required_params = {"n", "alpha"};
  f.system = [](const Params& p) {
    return laguerre_system<double>(require_param(p.alpha, "alpha", "laguerre-real"));
  };
  f.members = {{"(-1)^n L_n^alpha(x)", SolutionClass::dominant(1)}};
  for (int level = 0; level <= 2; ++level) {
    f.validity.push_back(
        {"Laguerre level " + std::to_string(level),
         "integer n > " + std::to_string(level) + ", alpha > -1",
         "[2n*+alpha+2sqrt(n*(n*+alpha)), inf), n* = n-" + std::to_string(level),
         [level](const Params& p, double x) {
           return p.n && p.alpha && is_integer(*p.n) && *p.n > level && *p.alpha > -1 &&
                  x >= laguerre_validity_edge(int(*p.n), *p.alpha, level);
         },
         {{Params::n_alpha(level + 3, 0.0), laguerre_validity_edge(level + 3, 0.0, level)},
          {Params::n_alpha(20, 5.0), laguerre_validity_edge(20, 5.0, level)},
          {Params::n_alpha(20, 5.0), laguerre_validity_edge(20, 5.0, level) + 30}}});
  }
  f.ratio = laguerre_real_ratio;
  f.sample = [](std::mt19937_64& rng) {
    Sample s;
    s.depth = uniform_int(rng, 0, 2);
    const int n = uniform_int(rng, s.depth == 2 ? 10 : s.depth + 1, 25);
    const double alpha = uniform(rng, -0.9, 10.0);
    s.params = Params::n_alpha(n, alpha);
    s.x = laguerre_validity_edge(n, alpha, s.depth) + uniform(rng, 0.0, 20.0);
    return s;
  };
  return f;
}

// Representative parameters for the registration-time sign check of d and e.
inline void check_registration(const FamilyDescriptor& f, const Params& p, double n, double lo,
                               double hi) {
  const auto sys = f.system(p);
  const auto msg = check_sign_constancy(sys, n, Interval<double>::open(lo, hi));
  if (!msg.empty()) throw RegimeError("registration of " + f.name + ": " + msg);
}

inline std::map<std::string, FamilyDescriptor> build_registry() {
  std::map<std::string, FamilyDescriptor> r;
  for (auto f : {make_pcf_u(), make_pcf_v(), make_mills(), make_ierfc(), make_oblate_q(),
                 make_oblate_p(), make_laguerre_neg(), make_bessel_i(), make_bessel_k(),
                 make_hermite_real(), make_laguerre_real()}) {
    r.emplace(f.name, std::move(f));
  }
  check_registration(r.at("pcf-u"), Params{}, 2.0, 0.0, 30.0);
  check_registration(r.at("oblate-q"), Params::n_m(2.0, 1.0), 2.0, 0.0, 30.0);
  check_registration(r.at("laguerre-neg"), Params::nu_alpha(1.0, 1.0), 2.0, 0.0, 30.0);
  check_registration(r.at("bessel-i"), Params{}, 2.0, 0.0, 30.0);
  check_registration(r.at("bessel-k"), Params{}, 2.0, 0.0, 30.0);
  check_registration(r.at("hermite-real"), Params{}, 3.0, 0.0, 30.0);
  check_registration(r.at("laguerre-real"), Params::n_alpha(3, 0.5), 3.0, 0.0, 30.0);
  return r;
}

}  // namespace detail

inline const std::map<std::string, FamilyDescriptor>& registry() {
  static const std::map<std::string, FamilyDescriptor> r = detail::build_registry();
  return r;
}

inline std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : registry()) out.push_back(k);
  return out;
}

inline const FamilyDescriptor& family(const std::string& name) {
  const auto& r = registry();
  const auto it = r.find(name);
  if (it == r.end()) throw DomainError("unknown family '" + name + "'");
  return it->second;
}

/// Enclosures of the family's ratio in its natural normalization. Minimal
/// members are refined up to `depth`; other members return one enclosure.
inline EnclosureSequence<double> ratio_enclosure(const std::string& name, const Params& params,
                                                 double x, int depth,
                                                 double rel_tol = kDefaultRelTol) {
  const auto& f = family(name);
  return detail::with_target(f.ratio(params, x, depth, rel_tol), f.ratio_target);
}

inline double oblate_q_uniform_cap(double n, double m) { return std::sqrt((n + m) / (n - m)); }

// ---------------------------------------------------------------------------
// Turán reports.

struct TuranSample {
  double x = 0;
  Enclosure<double> pointwise;
  std::optional<double> oracle;
  std::vector<ChainLink> chain;
  bool pointwise_contains_oracle = true;
  bool verdict = false;
};

struct TuranReport {
  std::string family;
  std::string id;
  std::string quantity;
  Params params;
  Interval<double> uniform;
  std::vector<TuranSample> samples;

  bool all_pass() const {
    for (const auto& s : samples) {
      if (!s.verdict) return false;
    }
    return !samples.empty();
  }
};

/// Direct value of a Turán quantity, keyed by TuranSpec::id.
using TuranOracle = std::function<std::optional<double>(const std::string& id, const Params&, double x)>;

/// Evaluates every chain inequality of the selected quantity at each x, on
/// the oracle value, and checks the oracle value against the pointwise
/// enclosure (relative slack 1e-12). Without an oracle only the pointwise
/// enclosures are reported and the verdict is false.
inline TuranReport turan_check(const std::string& name, const Params& params,
                               std::span<const double> xs, const TuranOracle& oracle,
                               std::size_t which = 0) {
  const auto& f = family(name);
  if (which >= f.turan.size()) {
    throw DomainError(name + ": no Turán-type quantity #" + std::to_string(which));
  }
  const auto& spec = f.turan[which];
  TuranReport rep;
  rep.family = name;
  rep.id = spec.id;
  rep.quantity = spec.quantity;
  rep.params = params;
  for (double x : xs) spec.require(params, x);
  rep.uniform = spec.uniform(params);
  for (double x : xs) {
    TuranSample s;
    s.x = x;
    s.pointwise = spec.pointwise(params, x);
    if (s.pointwise.lower > s.pointwise.upper) {
      throw InconsistentBoundsError(name + ": pointwise Turán enclosure is empty");
    }
    if (oracle) s.oracle = oracle(spec.id, params, x);
    if (s.oracle) {
      s.chain = spec.chain(params, *s.oracle);
      s.pointwise_contains_oracle = s.pointwise.contains(*s.oracle, 1e-12);
      s.verdict = s.pointwise_contains_oracle;
      for (const auto& l : s.chain) s.verdict = s.verdict && l.holds;
    }
    rep.samples.push_back(std::move(s));
  }
  return rep;
}

}  // namespace ratio_bounds::families
