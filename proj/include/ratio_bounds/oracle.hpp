#pragma once

// High-precision reference values for the validation path. Deliberately
// independent of the bounds headers: every quantity is computed from its own
// recurrence, series or integral in 50- or 100-digit binary floating point.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ratio_bounds/errors.hpp"
#include "ratio_bounds/params.hpp"

namespace ratio_bounds::oracle {

using Big = boost::multiprecision::cpp_bin_float_50;
using Huge = boost::multiprecision::cpp_bin_float_100;

enum class Method { BackwardRecurrence, ForwardRecurrence, Series, Quadrature, CompanionMatrix, ClosedForm };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::BackwardRecurrence: return "BackwardRecurrence";
    case Method::ForwardRecurrence: return "ForwardRecurrence";
    case Method::Series: return "Series";
    case Method::Quadrature: return "Quadrature";
    case Method::CompanionMatrix: return "CompanionMatrix";
    case Method::ClosedForm: return "ClosedForm";
  }
  return "?";
}

struct OracleValue {
  double value = 0;
  double abs_error_estimate = 0;
  Method method = Method::ClosedForm;
};

inline constexpr int kDefaultDigits = 30;

/// Digit target: RATIO_BOUNDS_PRECISION if set (clamped to [10, 45]), else 30.
inline int default_digits() {
  if (const char* env = std::getenv("RATIO_BOUNDS_PRECISION")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env) return static_cast<int>(std::clamp(v, 10L, 45L));
  }
  return kDefaultDigits;
}

namespace detail {

inline std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

template <class T>
T tol_for(int digits) {
  return pow(T(10), -digits);
}

template <class T>
bool agree(const T& a, const T& b, int digits) {
  const T scale = std::max(abs(a), abs(b));
  return abs(a - b) <= tol_for<T>(digits) * (scale > 0 ? scale : T(1));
}

// Floor on any reported error: the working precision of Big.
inline double precision_floor(double v) { return 1e-45 * std::max(1.0, std::fabs(v)); }

template <class T>
OracleValue make(const T& v, const T& err, Method m) {
  const double d = static_cast<double>(v);
  return {d, static_cast<double>(abs(err)) + precision_floor(d), m};
}

// 1/Gamma(z), zero at the poles.
template <class T>
T rgamma(const T& z) {
  if (z <= 0 && floor(z) == z) return T(0);
  return T(1) / boost::math::tgamma(z);
}

inline int start_offset(double x) {
  return std::max(50, 4 * static_cast<int>(std::ceil(std::fabs(x))));
}

// Start offset for recurrences whose dominant/minimal ratio grows like
// exp(2|x| sqrt(k)) (parabolic cylinder, iterated erfc). Starting at n + K
// gains 2|x| (sqrt(n+K) - sqrt(n)) nepers, so 30 digits need
// sqrt(n+K) >= sqrt(n) + 40/|x|.
inline int sqrt_rate_offset(double x, double n = 0) {
  const double rn = std::sqrt(std::max(n, 0.0));
  const double top = rn + 40.0 / std::max(std::fabs(x), 0.1);
  const double need = std::ceil(top * top - rn * rn);
  return std::max(start_offset(x), static_cast<int>(std::min(need, 1e6)));
}

// Runs a backward recurrence from start indices N, 2N, 4N and returns the
// first value that agrees with its predecessor.
template <class T, class Run>
std::pair<T, T> miller(Run run, int n_start_offset, int digits, const std::string& what) {
  T prev = run(n_start_offset);
  for (int k = 1; k <= 2; ++k) {
    const T cur = run(n_start_offset << k);
    if (agree(prev, cur, digits)) return {cur, abs(cur - prev)};
    prev = cur;
  }
  throw NoConvergence(what + ": backward recurrence did not stabilize");
}

// ---- parabolic cylinder U ------------------------------------------------------

// Ratios r_a = U(a,x)/U(a-1,x) for a = n .. n+count-1, from the recurrence
// r_a = 1/(x + (a + 1/2) r_{a+1}) started at a = n + offset.
inline std::vector<Big> pcf_u_ratios(const Big& n, const Big& x, int offset, int count) {
  const Big top = n + offset;
  Big r = Big(2) / (x + sqrt(x * x + 4 * top + 2));
  std::vector<Big> out(static_cast<std::size_t>(count));
  for (int k = offset - 1; k >= 0; --k) {
    const Big a = n + k;
    r = Big(1) / (x + (a + Big(0.5)) * r);
    if (k < count) out[static_cast<std::size_t>(k)] = r;
  }
  return out;
}

inline std::vector<Big> pcf_u_ratios_converged(double n, double x, int count, int digits,
                                               Big& err) {
  std::vector<Big> best;
  auto run = [&](int offset) {
    best = pcf_u_ratios(Big(n), Big(x), std::max(offset, count + 1), count);
    return best.front();
  };
  auto [v, e] = miller<Big>(run, sqrt_rate_offset(x, n), digits, "pcf-u oracle");
  err = e;
  (void)v;
  return best;
}

}  // namespace detail

/// U(a, x) from the Maclaurin-type expansion U(a,0) u1 + U'(a,0) u2 with
/// u1 = e^{-x^2/4} M(a/2+1/4, 1/2, x^2/2), u2 = x e^{-x^2/4} M(a/2+3/4, 3/2, x^2/2).
/// Evaluated in 100-digit arithmetic; cancellation for large positive x costs
/// about x^2/(2 ln 10) digits, so x is limited to 17. Negative x has no
/// cancellation and is limited to 40 by the term count.
inline Huge pcf_u_series(const Huge& a, const Huge& x) {
  if (x > 17) throw NoConvergence("pcf series: x > 17 would lose too many digits");
  if (x < -40) throw NoConvergence("pcf series: x < -40 is out of range");
  using boost::math::constants::root_pi;
  const Huge z = x * x / 2;
  auto kummer = [&](const Huge& p, const Huge& q) {
    Huge term = 1, sum = 1;
    for (int k = 0; k < 20000; ++k) {
      term *= (p + k) / (q + k) * z / (k + 1);
      sum += term;
      if (abs(term) < abs(sum) * pow(Huge(10), -105) && k > z) break;
    }
    return sum;
  };
  const Huge u0 = root_pi<Huge>() * pow(Huge(2), -(a / 2 + Huge(0.25))) *
                  detail::rgamma<Huge>(Huge(0.75) + a / 2);
  const Huge du0 = -root_pi<Huge>() * pow(Huge(2), -(a / 2 - Huge(0.25))) *
                   detail::rgamma<Huge>(Huge(0.25) + a / 2);
  const Huge e = exp(-x * x / 4);
  Huge out = 0;
  if (u0 != 0) out += u0 * e * kummer(a / 2 + Huge(0.25), Huge(0.5));
  if (du0 != 0) out += du0 * x * e * kummer(a / 2 + Huge(0.75), Huge(1.5));
  return out;
}

/// V(a,x) = Gamma(1/2+a)/pi (sin(pi a) U(a,x) + U(a,-x)), divided by Gamma(a+1/2).
inline Huge pcf_v_normalized_series(const Huge& a, const Huge& x) {
  using boost::math::constants::pi;
  return (sin(pi<Huge>() * a) * pcf_u_series(a, x) + pcf_u_series(a, -x)) / pi<Huge>();
}

// ---------------------------------------------------------------------------
// Individual family oracles.

namespace detail {

struct BigValue {
  Big value;
  Big err;
  Method method;
};

// r_n = U(n,x)/U(n-1,x).
inline BigValue pcf_u_ratio(double n, double x, int digits) {
  if (x <= 2) {
    // For x < 0, U is the dominant solution, and near x = 0 both solutions
    // have ratios of equal size so backward recurrence converges only
    // algebraically. The series covers both cases.
    const Huge v = pcf_u_series(Huge(n), Huge(x)) / pcf_u_series(Huge(n) - 1, Huge(x));
    return {Big(v), Big(0), Method::Series};
  }
  Big err;
  const auto r = pcf_u_ratios_converged(n, x, 1, digits, err);
  return {r[0], err, Method::BackwardRecurrence};
}

inline OracleValue pcf_u(double n, double x, int digits) {
  const auto r = pcf_u_ratio(n, x, digits);
  return make(r.value, r.err, r.method);
}

inline OracleValue pcf_v(double n, double x, int digits) {
  if (!(n > 0.5)) throw DomainError("pcf-v oracle: needs n > 1/2");
  const Huge num = pcf_v_normalized_series(Huge(n), Huge(x));
  const Huge den = pcf_v_normalized_series(Huge(n) - 1, Huge(x));
  const Huge v = (Huge(n) - Huge(0.5)) * num / den;
  (void)digits;
  return {static_cast<double>(v), precision_floor(static_cast<double>(v)), Method::Series};
}

inline Big mills_erfc(const Big& x) {
  using boost::math::constants::half_pi;
  return sqrt(half_pi<Big>()) * exp(x * x / 2) * boost::math::erfc(x / sqrt(Big(2)));
}

inline Big mills_quadrature(const Big& x) {
  boost::math::quadrature::exp_sinh<Big> integrator;
  return integrator.integrate(
      [&](const Big& u) { return u > 1e4 ? Big(0) : Big(exp(-x * u - u * u / 2)); },
      tol_for<Big>(32));
}

// i^n erfc(x) / i^{n-1} erfc(x) from rho_{k-1} = 1/(2x + 2k rho_k).
inline Big ierfc_ratio(int n, const Big& x, int offset) {
  const int top = n + offset;
  Big rho = Big(1) / (x + sqrt(x * x + 2 * top));
  for (int k = top; k > n; --k) rho = Big(1) / (2 * x + 2 * k * rho);
  return rho;
}

// r_k = i Q_k^m(ix)/Q_{k-1}^m(ix) for k = n .. n+count-1:
// r_k = (k+m) / ((k-m+1) r_{k+1} + (2k+1) x).
inline std::vector<Big> oblate_q_ratios(const Big& n, const Big& m, const Big& x, int offset,
                                        int count) {
  const Big top = n + offset;
  const Big A = top - m + 1, B = (2 * top + 1) * x, C = top + m;
  Big r = 2 * C / (B + sqrt(B * B + 4 * A * C));
  std::vector<Big> out(static_cast<std::size_t>(count));
  for (int j = offset - 1; j >= 0; --j) {
    const Big k = n + j;
    r = (k + m) / ((k - m + 1) * r + (2 * k + 1) * x);
    if (j < count) out[static_cast<std::size_t>(j)] = r;
  }
  return out;
}

inline std::vector<Big> oblate_q_converged(double n, double m, double x, int count, int digits,
                                           Big& err) {
  std::vector<Big> best;
  auto run = [&](int offset) {
    best = oblate_q_ratios(Big(n), Big(m), Big(x), std::max(offset, count + 1), count);
    return best.front();
  };
  // The two solution ratios differ by a factor about 1 + 2x per step.
  const int offset = std::max(start_offset(x) + static_cast<int>(n),
                              static_cast<int>(std::min(std::ceil(80.0 / x), 1e6)));
  err = miller<Big>(run, offset, digits, "oblate-q oracle").second;
  return best;
}

// p_k = e^{-i k pi/2} P_k^m(ix) for k = m-1 .. upto, with p_{m-1} = 0, p_m = 1.
inline std::vector<Big> oblate_p_values(int m, int upto, const Big& x) {
  std::vector<Big> p(static_cast<std::size_t>(upto - m + 2));
  p[0] = 0;
  p[1] = 1;
  for (int k = m; k < upto; ++k) {
    const std::size_t i = static_cast<std::size_t>(k - m + 1);
    p[i + 1] = ((2 * k + 1) * x * p[i] + Big(k + m) * p[i - 1]) / Big(k - m + 1);
  }
  return p;
}

// S_beta = sum_k (s)_k x^k / (Gamma(beta+1+k) k!); positive terms when s > 0.
inline Big laguerre_sum(const Big& s, const Big& beta, const Big& x) {
  Big sum = 0;
  Big poch = 1, xk = 1, fact = 1;
  for (int k = 0; k < 20000; ++k) {
    const Big term = poch * xk * rgamma<Big>(beta + 1 + k) / fact;
    sum += term;
    if (k > 2 * static_cast<double>(x) + 10 && abs(term) < abs(sum) * tol_for<Big>(48)) break;
    poch *= s + k;
    xk *= x;
    fact *= k + 1;
  }
  return sum;
}

// L_nu^alpha(-x) e^{x} (the common factor e^{-x} is dropped).
inline Big laguerre_neg_scaled(const Big& nu, const Big& alpha, const Big& x) {
  return boost::math::tgamma(nu + alpha + 1) * rgamma<Big>(nu + 1) *
         laguerre_sum(nu + alpha + 1, alpha, x);
}

inline OracleValue laguerre_neg(double nu, double alpha, double x) {
  // Same nu + alpha on both sides: the Gamma prefactors reduce to 1/(nu+1).
  const Big s = Big(nu) + Big(alpha) + 1;
  const Big v = laguerre_sum(s, Big(alpha) - 1, Big(x)) /
                ((Big(nu) + 1) * laguerre_sum(s, Big(alpha), Big(x)));
  return make(v, Big(0), Method::Series);
}

// r_k = I_k/I_{k-1} for k = n.. from r_k = 1/(2k/x + r_{k+1}).
inline std::vector<Big> bessel_i_ratios(const Big& n, const Big& x, int offset, int count) {
  const Big top = n + offset;
  Big r = x / (top + sqrt(top * top + x * x));
  std::vector<Big> out(static_cast<std::size_t>(count));
  for (int j = offset - 1; j >= 0; --j) {
    const Big k = n + j;
    r = Big(1) / (2 * k / x + r);
    if (j < count) out[static_cast<std::size_t>(j)] = r;
  }
  return out;
}

inline std::vector<Big> bessel_i_converged(double n, double x, int count, int digits, Big& err) {
  std::vector<Big> best;
  auto run = [&](int offset) {
    best = bessel_i_ratios(Big(n), Big(x), std::max(offset, count + 1), count);
    return best.front();
  };
  err = miller<Big>(run, start_offset(x), digits, "bessel-i oracle").second;
  return best;
}

inline Big bessel_k(const Big& v, const Big& x) {
  return boost::math::cyl_bessel_k(abs(v), x);
}

inline std::vector<Big> hermite_values(int n, const Big& x) {
  std::vector<Big> h(static_cast<std::size_t>(n + 1));
  h[0] = 1;
  if (n >= 1) h[1] = 2 * x;
  for (int k = 1; k < n; ++k) {
    h[static_cast<std::size_t>(k + 1)] = 2 * x * h[static_cast<std::size_t>(k)] -
                                         2 * k * h[static_cast<std::size_t>(k - 1)];
  }
  return h;
}

inline std::vector<Big> laguerre_values(int n, const Big& alpha, const Big& x) {
  std::vector<Big> l(static_cast<std::size_t>(n + 1));
  l[0] = 1;
  if (n >= 1) l[1] = 1 + alpha - x;
  for (int k = 1; k < n; ++k) {
    l[static_cast<std::size_t>(k + 1)] =
        ((2 * k + 1 + alpha - x) * l[static_cast<std::size_t>(k)] -
         (k + alpha) * l[static_cast<std::size_t>(k - 1)]) /
        (k + 1);
  }
  return l;
}

// i^{-n} H_n(ix): h_{k+1} = 2x h_k + 2k h_{k-1}.
inline std::vector<Big> hermite_imag_values(int n, const Big& x) {
  std::vector<Big> h(static_cast<std::size_t>(n + 1));
  h[0] = 1;
  if (n >= 1) h[1] = 2 * x;
  for (int k = 1; k < n; ++k) {
    h[static_cast<std::size_t>(k + 1)] = 2 * x * h[static_cast<std::size_t>(k)] +
                                         2 * k * h[static_cast<std::size_t>(k - 1)];
  }
  return h;
}

inline void require_x(bool ok, const std::string& what, double x) {
  if (!ok) throw DomainError(what + ": x=" + fmt(x) + " outside the oracle domain");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Public oracle operations.

/// Mills ratio r(x) = e^{x^2/2} int_x^inf e^{-t^2/2} dt from erfc, cross-checked
/// by double-exponential quadrature of int_0^inf e^{-xu-u^2/2} du.
inline OracleValue oracle_mills(double x, int digits = default_digits()) {
  detail::require_x(x >= 0 && std::isfinite(x), "mills oracle", x);
  const Big a = detail::mills_erfc(Big(x));
  const Big b = detail::mills_quadrature(Big(x));
  if (!detail::agree(a, b, digits)) throw NoConvergence("mills oracle: erfc and quadrature disagree");
  return detail::make(a, a - b, Method::Series);
}

/// i^n erfc(x) / i^{n-1} erfc(x) through
///   i^n erfc(x) = e^{-x^2/2} U(n+1/2, x sqrt 2) / (2^{(n-1)/2} sqrt pi):
/// closed form at x = 0, the U series for x sqrt 2 <= 2, backward recurrence
/// above. Where both are affordable (x >= 1/2) each checks the other.
inline OracleValue oracle_ierfc_ratio(int n, double x, int digits = default_digits()) {
  if (n < 1) throw DomainError("ierfc oracle: n >= 1");
  detail::require_x(x >= 0 && std::isfinite(x), "ierfc oracle", x);
  if (x == 0) {
    using boost::math::tgamma;
    const Big v = tgamma(Big(n + 1) / 2) / (2 * tgamma(Big(n) / 2 + 1));
    return detail::make(v, Big(0), Method::ClosedForm);
  }
  auto run = [&](int offset) { return detail::ierfc_ratio(n, Big(x), offset); };
  const Huge t = Huge(x) * sqrt(Huge(2));
  if (t <= 2) {
    const Huge a(n);
    const Big v(pcf_u_series(a + Huge(0.5), t) /
                (pcf_u_series(a - Huge(0.5), t) * sqrt(Huge(2))));
    if (x >= 0.5) {
      auto [m, err] =
          detail::miller<Big>(run, detail::sqrt_rate_offset(x, n), digits, "ierfc oracle");
      if (!detail::agree(v, m, std::min(digits, 25))) {
        throw NoConvergence("ierfc oracle: series and recurrence disagree");
      }
    }
    return detail::make(v, v * detail::tol_for<Big>(30), Method::Series);
  }
  auto [v, err] = detail::miller<Big>(run, detail::sqrt_rate_offset(x, n), digits, "ierfc oracle");
  // U evaluated at x sqrt 2 rounded to double: good to about 1e-13.
  const Big u = detail::pcf_u_ratio(n + 0.5, std::sqrt(2.0) * x, digits).value / sqrt(Big(2));
  if (abs(u / v - 1) > Big(1e-13)) {
    throw NoConvergence("ierfc oracle: recurrence and parabolic cylinder values disagree");
  }
  return detail::make(v, err, Method::BackwardRecurrence);
}

/// U(n,0)/U(n-1,0) = 2^{-1/2} Gamma(1/4 + n/2)/Gamma(3/4 + n/2).
inline OracleValue oracle_pcf_u_at_zero(double n) {
  const Big v = boost::math::tgamma(Big(0.25) + Big(n) / 2) /
                boost::math::tgamma(Big(0.75) + Big(n) / 2) / sqrt(Big(2));
  return detail::make(v, Big(0), Method::ClosedForm);
}

/// i Q_1(ix)/Q_0(ix) = (1 - x atan(1/x))/atan(1/x), the m = 0 closed form.
inline OracleValue oracle_oblate_q_m0_n1(double x) {
  const Big th = atan(Big(1) / Big(x));
  return detail::make((1 - Big(x) * th) / th, Big(0), Method::ClosedForm);
}

/// The family's ratio in its natural normalization (the same target as
/// families::ratio_enclosure).
inline OracleValue oracle_ratio(const std::string& family, const Params& p, double x,
                                int digits = default_digits()) {
  using namespace detail;
  if (!std::isfinite(x)) throw DomainError("oracle: x must be finite");
  if (family == "pcf-u") return pcf_u(require_param(p.n, "n", family), x, digits);
  if (family == "pcf-v") {
    require_x(x > 0 && x <= 17, "pcf-v oracle", x);
    return pcf_v(require_param(p.n, "n", family), x, digits);
  }
  if (family == "mills") return oracle_mills(x, digits);
  if (family == "ierfc") {
    return oracle_ierfc_ratio(static_cast<int>(require_param(p.n, "n", family)), x, digits);
  }
  if (family == "oblate-q") {
    require_x(x > 0, "oblate-q oracle", x);
    Big err;
    const auto r = oblate_q_converged(require_param(p.n, "n", family),
                                      require_param(p.m, "m", family), x, 1, digits, err);
    return make(r[0], err, Method::BackwardRecurrence);
  }
  if (family == "oblate-p") {
    const int n = static_cast<int>(require_param(p.n, "n", family));
    const int m = static_cast<int>(require_param(p.m, "m", family));
    if (!(n > m && m >= 0)) throw DomainError("oblate-p oracle: integers n > m >= 0");
    const auto v = oblate_p_values(m, n, Big(x));
    return make(v.back() / v[v.size() - 2], Big(0), Method::ForwardRecurrence);
  }
  if (family == "laguerre-neg") {
    require_x(x > 0, "laguerre-neg oracle", x);
    return laguerre_neg(require_param(p.nu, "nu", family), require_param(p.alpha, "alpha", family),
                        x);
  }
  if (family == "bessel-i") {
    require_x(x > 0, "bessel-i oracle", x);
    Big err;
    const auto r = bessel_i_converged(require_param(p.n, "n", family), x, 1, digits, err);
    return make(r[0], err, Method::BackwardRecurrence);
  }
  if (family == "bessel-k") {
    require_x(x > 0, "bessel-k oracle", x);
    const Big n(require_param(p.n, "n", family));
    return make(bessel_k(n, Big(x)) / bessel_k(n - 1, Big(x)), Big(0), Method::Series);
  }
  if (family == "hermite-real") {
    const int n = static_cast<int>(require_param(p.n, "n", family));
    if (n < 1) throw DomainError("hermite oracle: n >= 1");
    const auto h = hermite_values(n, Big(x));
    return make(h[static_cast<std::size_t>(n)] / h[static_cast<std::size_t>(n - 1)], Big(0),
                Method::ForwardRecurrence);
  }
  if (family == "laguerre-real") {
    const int n = static_cast<int>(require_param(p.n, "n", family));
    if (n < 1) throw DomainError("laguerre oracle: n >= 1");
    const auto l = laguerre_values(n, Big(require_param(p.alpha, "alpha", family)), Big(x));
    return make(-l[static_cast<std::size_t>(n)] / l[static_cast<std::size_t>(n - 1)], Big(0),
                Method::ForwardRecurrence);
  }
  throw DomainError("oracle: unknown family '" + family + "'");
}

/// -U'(n,x)/U(n,x) = 1/r_n - x/2 with r_n = U(n,x)/U(n-1,x), from the DDE
/// U'(n,x) = x/2 U(n,x) - U(n-1,x).
inline OracleValue oracle_logderiv(const std::string& family, const Params& p, double x,
                                   int digits = default_digits()) {
  if (family != "pcf-u") throw DomainError("logderiv oracle: only pcf-u is supported");
  const double n = require_param(p.n, "n", family);
  const auto r = detail::pcf_u_ratio(n, x, digits);
  const Big v = 1 / r.value - Big(x) / 2;
  return detail::make(v, r.err / (r.value * r.value), r.method);
}

/// Direct value of a Turán-type quantity; ids match families::TuranSpec::id.
inline OracleValue oracle_turan(const std::string& id, const Params& p, double x,
                                int digits = default_digits()) {
  using namespace detail;
  if (id == "pcf-u") {
    const double n = require_param(p.n, "n", id);
    const auto r0 = pcf_u_ratio(n, x, digits), r1 = pcf_u_ratio(n + 1, x, digits);
    return make(r0.value / r1.value, r0.err + r1.err, r0.method);
  }
  if (id == "hermite-imag") {
    const int k = static_cast<int>(require_param(p.n, "n", id));
    const auto h = hermite_imag_values(2 * k + 1, Big(x));
    const auto i = static_cast<std::size_t>(2 * k);
    return make(h[i] * h[i] / (h[i - 1] * h[i + 1]), Big(0), Method::ForwardRecurrence);
  }
  if (id == "oblate-q") {
    Big err;
    const auto r = oblate_q_converged(require_param(p.n, "n", id), require_param(p.m, "m", id), x,
                                      2, digits, err);
    return make(r[0] / r[1], err, Method::BackwardRecurrence);
  }
  if (id == "oblate-p") {
    const int n = static_cast<int>(require_param(p.n, "n", id));
    const int m = static_cast<int>(require_param(p.m, "m", id));
    const auto v = oblate_p_values(m, n + 1, Big(x));
    const std::size_t i = v.size() - 2;
    return make(v[i] * v[i] / (v[i - 1] * v[i + 1]), Big(0), Method::ForwardRecurrence);
  }
  if (id == "laguerre-neg") {
    const double nu = require_param(p.nu, "nu", id), a = require_param(p.alpha, "alpha", id);
    const Big s = Big(nu) + Big(a) + 1;
    const Big S0 = laguerre_sum(s, Big(a), Big(x));
    const Big v = Big(nu) / (Big(nu) + 1) * laguerre_sum(s, Big(a) - 1, Big(x)) *
                  laguerre_sum(s, Big(a) + 1, Big(x)) / (S0 * S0);
    return make(v, Big(0), Method::Series);
  }
  if (id == "laguerre-neg-2") {
    const Big nu(require_param(p.nu, "nu", id)), a(require_param(p.alpha, "alpha", id));
    const Big X(x);
    const Big l0 = laguerre_neg_scaled(nu, a, X);
    const Big v = laguerre_neg_scaled(nu - 1, a, X) * laguerre_neg_scaled(nu + 1, a, X) / (l0 * l0);
    return make(v, Big(0), Method::Series);
  }
  if (id == "bessel-i") {
    Big err;
    const auto r = bessel_i_converged(require_param(p.n, "n", id), x, 2, digits, err);
    return make(r[0] / r[1], err, Method::BackwardRecurrence);
  }
  if (id == "bessel-k") {
    const Big n(require_param(p.n, "n", id)), X(x);
    const Big k0 = bessel_k(n, X);
    return make(k0 * k0 / (bessel_k(n - 1, X) * bessel_k(n + 1, X)), Big(0), Method::Series);
  }
  throw DomainError("oracle: unknown Turán quantity '" + id + "'");
}

/// Largest zero of H_n or L_n^alpha: the largest eigenvalue of the Jacobi
/// matrix, then bisection on the recurrence-evaluated polynomial.
inline OracleValue oracle_largest_zero(const std::string& family, int n,
                                       std::optional<double> alpha = std::nullopt,
                                       int digits = default_digits()) {
  if (n < 1) throw DomainError("zero oracle: n >= 1");
  const bool hermite = family == "hermite" || family == "hermite-real";
  const bool laguerre = family == "laguerre" || family == "laguerre-real";
  if (!hermite && !laguerre) throw DomainError("zero oracle: unknown family '" + family + "'");
  if (laguerre && !(alpha && *alpha > -1)) throw DomainError("zero oracle: Laguerre needs alpha > -1");

  Eigen::VectorXd diag(n);
  Eigen::VectorXd off(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) diag(k) = hermite ? 0.0 : 2.0 * k + *alpha + 1.0;
  for (int k = 1; k < n; ++k) {
    off(k - 1) = hermite ? std::sqrt(k / 2.0) : std::sqrt(k * (k + *alpha));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  const double guess = es.eigenvalues().maxCoeff();

  auto poly = [&](const Big& x) {
    return hermite ? detail::hermite_values(n, x).back()
                   : detail::laguerre_values(n, Big(*alpha), x).back();
  };
  double delta = 1e-8 * std::max(1.0, std::fabs(guess));
  Big lo(guess - delta), hi(guess + delta);
  for (int tries = 0; poly(lo) * poly(hi) > 0; ++tries) {
    if (tries > 20) throw NoConvergence("zero oracle: no sign change around the eigenvalue");
    delta *= 4;
    lo = guess - delta;
    hi = guess + delta;
  }
  const Big flo = poly(lo);
  const Big eps = detail::tol_for<Big>(digits) * std::max(Big(1), abs(hi));
  while (hi - lo > eps) {
    const Big mid = (lo + hi) / 2;
    if (poly(mid) * flo > 0) lo = mid; else hi = mid;
  }
  return detail::make((lo + hi) / 2, hi - lo, Method::CompanionMatrix);
}

}  // namespace ratio_bounds::oracle
