#pragma once

// Difference-differential systems of the special-function families. Imaginary
// argument families are stored through real sequences (for instance
// p_n(x) = e^{-i n pi/2} P_n^m(ix)), so every system here is real.

#include <cmath>
#include <limits>
#include <string>

#include "ratio_bounds/system_core.hpp"

namespace ratio_bounds::families {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// y_n = e^{i pi n} U(n, x):  a = x/2, b = -x/2, d = 1, e = n - 1/2.
/// Also solved by V(n, x)/Gamma(n + 1/2), and by U(n, -x) in the variable -x.
template <std::floating_point Real = double>
CoefficientSystem<Real> pcf_system() {
  CoefficientSystem<Real> s;
  s.name = "pcf";
  s.a = [](Real, Real x) { return x / Real(2); };
  s.b = [](Real, Real x) { return -x / Real(2); };
  s.d = [](Real, Real) { return Real(1); };
  s.e = [](Real n, Real) { return n - Real(0.5); };
  s.index_domain = Interval<Real>::closed(Real(0.5), Real(kInf));
  return s;
}

/// Realified oblate Legendre functions of order m in x > 0:
/// a = n x/(1+x^2), b = -a, d = (n+m)/(1+x^2), e = (n-m)/(1+x^2).
template <std::floating_point Real = double>
CoefficientSystem<Real> oblate_system(Real m) {
  CoefficientSystem<Real> s;
  s.name = "oblate";
  s.a = [](Real n, Real x) { return n * x / (Real(1) + x * x); };
  s.b = [](Real n, Real x) { return -n * x / (Real(1) + x * x); };
  s.d = [m](Real n, Real x) { return (n + m) / (Real(1) + x * x); };
  s.e = [m](Real n, Real x) { return (n - m) / (Real(1) + x * x); };
  s.index_domain = Interval<Real>::open(m, Real(kInf));
  s.x_domain = Interval<Real>::closed(Real(0), Real(kInf));
  return s;
}

/// Laguerre functions of negative argument along a line nu + alpha = sigma:
/// y_n = L_n^{sigma-n}(-x), with a = 0, d = 1, e_n = n/x and
/// b_n = -(sigma - n + 1 + x)/x. The ratio L_{nu+1}^{alpha-1}(-x)/L_nu^alpha(-x)
/// is h_n at n = nu + 1, sigma = nu + alpha.
template <std::floating_point Real = double>
CoefficientSystem<Real> laguerre_negative_system(Real sigma) {
  CoefficientSystem<Real> s;
  s.name = "laguerre-neg";
  s.a = [](Real, Real) { return Real(0); };
  s.b = [sigma](Real n, Real x) { return -(sigma - n + Real(1) + x) / x; };
  s.d = [](Real, Real) { return Real(1); };
  s.e = [](Real n, Real x) { return n / x; };
  s.index_domain = Interval<Real>::open(Real(0), Real(kInf));
  s.x_domain = Interval<Real>::open(Real(0), Real(kInf));
  return s;
}

/// y_n = I_n(x):  a = -n/x, b = (n-1)/x, d = e = 1.
template <std::floating_point Real = double>
CoefficientSystem<Real> bessel_i_system() {
  CoefficientSystem<Real> s;
  s.name = "bessel-i";
  s.a = [](Real n, Real x) { return -n / x; };
  s.b = [](Real n, Real x) { return (n - Real(1)) / x; };
  s.d = [](Real, Real) { return Real(1); };
  s.e = [](Real, Real) { return Real(1); };
  s.x_domain = Interval<Real>::open(Real(0), Real(kInf));
  return s;
}

/// y_n = K_n(x) has d = e = -1; the registered system is the sign-normalized
/// one for (-1)^n K_n(x), which coincides with the I system.
template <std::floating_point Real = double>
CoefficientSystem<Real> bessel_k_raw_system() {
  CoefficientSystem<Real> s;
  s.name = "bessel-k";
  s.a = [](Real n, Real x) { return -n / x; };
  s.b = [](Real n, Real x) { return (n - Real(1)) / x; };
  s.d = [](Real, Real) { return Real(-1); };
  s.e = [](Real, Real) { return Real(-1); };
  s.x_domain = Interval<Real>::open(Real(0), Real(kInf));
  return s;
}

/// Hermite polynomials:  a = 0, b = 2x, d = 2n, e = -1.
template <std::floating_point Real = double>
CoefficientSystem<Real> hermite_system() {
  CoefficientSystem<Real> s;
  s.name = "hermite-real";
  s.a = [](Real, Real) { return Real(0); };
  s.b = [](Real, Real x) { return Real(2) * x; };
  s.d = [](Real n, Real) { return Real(2) * n; };
  s.e = [](Real, Real) { return Real(-1); };
  s.index_domain = Interval<Real>::closed(Real(1), Real(kInf));
  return s;
}

/// (-1)^n L_n^alpha(x):  a = n/x, b = (x-n-alpha)/x, d = (n+alpha)/x, e = -n/x.
template <std::floating_point Real = double>
CoefficientSystem<Real> laguerre_system(Real alpha) {
  CoefficientSystem<Real> s;
  s.name = "laguerre-real";
  s.a = [](Real n, Real x) { return n / x; };
  s.b = [alpha](Real n, Real x) { return (x - n - alpha) / x; };
  s.d = [alpha](Real n, Real x) { return (n + alpha) / x; };
  s.e = [](Real n, Real x) { return -n / x; };
  s.index_domain = Interval<Real>::closed(Real(1), Real(kInf));
  s.x_domain = Interval<Real>::open(Real(0), Real(kInf));
  return s;
}

}  // namespace ratio_bounds::families
