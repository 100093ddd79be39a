// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ratio_bounds/families.hpp"
#include "ratio_bounds/oracle.hpp"

using namespace ratio_bounds;
using namespace ratio_bounds::families;
using oracle::Big;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
const std::vector<double> kPcfN{0.6, 1, 2, 5, 10, 50};
const std::vector<double> kPcfX{0, 0.5, 1, 2, 5, 10, 20};

// Collects failures for one criterion; the first few are printed.
struct Check {
  int total = 0;
  int failed = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    ++total;
    if (ok) return;
    ++failed;
    if (notes.size() < 5) notes.push_back(what);
  }
};

std::string num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

double rel(double a, double b) { return std::fabs(a / b - 1); }

bool report(int id, const char* title, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = c.failed == 0 && c.total > 0;
  std::printf("[%s] %2d %s (%d/%d checks, %.1f s)\n", ok ? "PASS" : "FAIL", id, title,
              c.total - c.failed, c.total, secs);
  for (const auto& n : c.notes) std::printf("       %s\n", n.c_str());
  std::fflush(stdout);
  return ok;
}

Big mills_cf_big(int k, const Big& x) {
  if (k == 0) return 1 / x;
  const Big t = (x + sqrt(4 * k + x * x)) / 2;
  Big v = k / t;
  for (int j = k - 1; j >= 1; --j) v = j / (x + v);
  return 1 / (x + v);
}

// 1. PCF-U enclosure containment.
void pcf_containment(Check& c) {
  const auto sys = pcf_system<double>();
  for (double n : kPcfN) {
    for (double x : kPcfX) {
      const auto e = pk_enclosure(sys, n, x, SolutionClass::minimal(-1));
      const double r = oracle::oracle_ratio("pcf-u", Params::with_n(n), x).value;
      c.expect(e.contains(r, 1e-12), "n=" + num(n) + " x=" + num(x) + ": " + num(r) +
                                         " not in [" + num(e.lower) + ", " + num(e.upper) + "]");
    }
  }
  const auto e = pk_enclosure(sys, 1.0, 0.0, SolutionClass::minimal(-1));
  c.expect(std::fabs(e.lower - 2 / std::sqrt(6.0)) <= 1e-15, "lower at (1,0) = " + num(e.lower));
  c.expect(std::fabs(e.upper - 2 / std::sqrt(2.0)) <= 1e-15, "upper at (1,0) = " + num(e.upper));
}

// 2. Refinement convergence at (n=1, x=5).
void refinement(Check& c) {
  const auto seq = refine_enclosure(pcf_system<double>(), 1.0, 5.0, SolutionClass::minimal(-1),
                                    10, 0.0);
  c.expect(seq.enclosures.size() == 11, "depth count " + std::to_string(seq.enclosures.size()));
  for (std::size_t k = 1; k < seq.enclosures.size(); ++k) {
    const auto& a = seq.enclosures[k - 1];
    const auto& b = seq.enclosures[k];
    c.expect(b.width() <= a.width(), "width grows at depth " + std::to_string(k));
    c.expect(b.lower >= a.lower && b.upper <= a.upper, "not nested at depth " + std::to_string(k));
  }
  c.expect(seq.last().relative_width() < 1e-6,
           "relative width at depth 10 = " + num(seq.last().relative_width()));
  const double r = oracle::oracle_ratio("pcf-u", Params::with_n(1), 5.0).value;
  c.expect(seq.last().contains(r, 1e-12), "depth-10 enclosure misses the oracle");
}

// 3. Mills ratio convergents.
void mills(Check& c) {
  for (double x : {0.0, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    const Big r = oracle::detail::mills_erfc(Big(x));
    c.expect(oracle::detail::agree(r, oracle::detail::mills_quadrature(Big(x)), 30),
             "oracle methods disagree at x=" + num(x));
    for (int k = 0; k <= 5; ++k) {
      if (k > 0 || x > 0) {
        c.expect(mills_cf_big(2 * k, Big(x)) > r, "R_" + std::to_string(2 * k) + " <= r at x=" + num(x));
      }
      c.expect(mills_cf_big(2 * k + 1, Big(x)) < r,
               "R_" + std::to_string(2 * k + 1) + " >= r at x=" + num(x));
      if (k > 0) {
        // The library's double evaluation matches the exact convergent.
        c.expect(rel(mills_cf_value(2 * k, x), static_cast<double>(mills_cf_big(2 * k, Big(x)))) <
                     1e-14,
                 "double R_" + std::to_string(2 * k) + " off at x=" + num(x));
      }
    }
  }
  const double r0 = oracle::oracle_mills(0.0).value;
  c.expect(rel(r0, std::sqrt(std::numbers::pi / 2)) <= kEps, "r(0) = " + num(r0));
  const double r1 = oracle::oracle_mills(1.0).value;
  c.expect(std::fabs(r1 - 0.6556795424) <= 1e-9, "r(1) = " + num(r1));
  const auto d1 = mills_bounds(0.0, 1).last();
  c.expect(std::fabs(d1.lower - 1) <= 1e-15, "depth-1 lower " + num(d1.lower));
  c.expect(std::fabs(d1.upper - std::sqrt(2.0)) <= 1e-15, "depth-1 upper " + num(d1.upper));
}

// 4. Iterated erfc.
void ierfc(Check& c) {
  for (int n = 1; n <= 6; ++n) {
    for (int i = 0; i <= 20; ++i) {
      const double x = 0.5 * i;
      const auto e = iterated_erfc_ratio_bounds(n, x);
      const double r = oracle::oracle_ierfc_ratio(n, x).value;
      c.expect(e.contains(r), "n=" + std::to_string(n) + " x=" + num(x) + ": " + num(r) +
                                  " not in [" + num(e.lower) + ", " + num(e.upper) + "]");
    }
  }
  const double a = oracle::oracle_ierfc_ratio(1, 0.0).value;
  c.expect(rel(a, 1 / std::sqrt(std::numbers::pi)) <= 2 * kEps, "i erfc(0)/erfc(0) = " + num(a));
}

// 5. Log-derivative bracket.
void logderiv(Check& c) {
  for (double n : kPcfN) {
    for (double x : kPcfX) {
      const double lo = std::sqrt(x * x / 4 + n - 0.5), hi = std::sqrt(x * x / 4 + n + 0.5);
      const auto e = pcf_logderiv_bounds(n, x);
      c.expect(rel(e.lower, lo) < 1e-15 && rel(e.upper, hi) < 1e-15,
               "bracket formula at n=" + num(n) + " x=" + num(x));
      const double v = oracle::oracle_logderiv("pcf-u", Params::with_n(n), x).value;
      c.expect(lo <= v && v <= hi, "n=" + num(n) + " x=" + num(x) + ": " + num(v) + " not in [" +
                                       num(lo) + ", " + num(hi) + "]");
    }
  }
}

// 6. Turán chains.
void turan(Check& c) {
  const TuranOracle o = [](const std::string& id, const Params& p, double x) {
    return std::optional<double>(oracle::oracle_turan(id, p, x).value);
  };
  auto run = [&](const std::string& fam, const Params& p, const std::vector<double>& xs,
                 std::size_t which) {
    const auto rep = turan_check(fam, p, xs, o, which);
    for (const auto& s : rep.samples) {
      std::string broken;
      for (const auto& l : s.chain) {
        if (!l.holds) broken += " [" + l.text + "]";
      }
      if (!s.pointwise_contains_oracle) broken += " [pointwise enclosure]";
      c.expect(s.verdict, fam + " " + p.describe() + " x=" + num(s.x) + ":" + broken);
    }
  };
  for (double n : kPcfN) run("pcf-u", Params::with_n(n), kPcfX, 0);
  for (double nu : {0.5, 1.0, 2.0, 5.0}) {
    for (double a : {0.5, 1.0, 2.0, 5.0}) {
      const auto p = Params::nu_alpha(nu, a);
      run("laguerre-neg", p, {0.5, 1.0, 5.0}, 0);
      for (double x : {0.5, 1.0, 5.0}) {
        const double v = oracle::oracle_turan("laguerre-neg", p, x).value;
        c.expect(nu / (nu + 1) * a / (a + 1) < v && v < nu / (nu + 1),
                 "laguerre-neg product " + p.describe() + " x=" + num(x) + " = " + num(v));
      }
    }
  }
  for (int k = 1; k <= 4; ++k) {
    run("pcf-v", Params::with_n(k), {-5.0, -1.0, 0.1, 0.5, 1.0, 2.0, 5.0}, 0);
  }
}

// 7. Largest-zero bounds.
void zeros(Check& c) {
  const double z7 = oracle::oracle_largest_zero("hermite", 7).value;
  c.expect(std::fabs(z7 - 2.6519613) <= 1e-6, "H_7 zero " + num(z7));
  const auto r7 = largest_zero_upper_bound(ZeroFamily::Hermite, 7, std::nullopt, 3);
  c.expect(r7.condition_satisfied, "H_7 level-3 condition fails");
  c.expect(std::fabs(r7.bound - std::sqrt(8.0)) <= 1e-15 && z7 < r7.bound, "H_7 bound " + num(r7.bound));
  const double z3 = oracle::oracle_largest_zero("hermite", 3).value;
  c.expect(rel(z3, std::sqrt(1.5)) <= 2 * kEps, "H_3 zero " + num(z3));
  const auto r3 = largest_zero_upper_bound(ZeroFamily::Hermite, 3, std::nullopt, 1);
  c.expect(r3.condition_satisfied && std::fabs(r3.bound - 2) <= 1e-15 && z3 < r3.bound,
           "H_3 level-1 bound " + num(r3.bound));
  for (int n = 2; n <= 8; ++n) {
    for (double a : {0.5, 1.0, 2.0}) {
      const auto rep = largest_zero_upper_bound(ZeroFamily::Laguerre, n, a, 1);
      const bool expected = a > 1.0 / (n - 1) - (n - 1);
      const std::string tag = "L_" + std::to_string(n) + "^" + num(a);
      c.expect(rep.condition_satisfied == expected, tag + ": condition evaluator disagrees");
      if (rep.condition_satisfied) {
        const double z = oracle::oracle_largest_zero("laguerre", n, a).value;
        c.expect(z < rep.bound, tag + ": zero " + num(z) + " >= bound " + num(rep.bound));
      }
    }
  }
}

// 8. Real-axis lower bounds at random points of each level's region.
void real_axis(Check& c) {
  std::mt19937_64 rng(8);
  auto uni = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int level = 0; level <= 3; ++level) {
    int got = 0;
    for (int tries = 0; got < 200 && tries < 10000; ++tries) {
      const int n = pick(level + 1, 30);
      const double x = hermite_validity_edge(n, level) + uni(0.0, 10.0);
      double b;
      try {
        b = hermite_real_lower_bound(n, x, level).value;
      } catch (const ValidityError&) {
        continue;  // intermediate bound not positive: outside the region
      }
      ++got;
      const double r = oracle::oracle_ratio("hermite-real", Params::with_n(n), x).value;
      c.expect(r > b, "hermite level " + std::to_string(level) + " n=" + std::to_string(n) +
                          " x=" + num(x) + ": " + num(r) + " <= " + num(b));
    }
    c.expect(got == 200, "hermite level " + std::to_string(level) + ": only " +
                             std::to_string(got) + " points");
  }
  for (int level = 0; level <= 2; ++level) {
    int got = 0;
    for (int tries = 0; got < 200 && tries < 10000; ++tries) {
      const int n = pick(level + 1, 25);
      const double a = uni(-0.9, 10.0);
      const double x = laguerre_validity_edge(n, a, level) + uni(0.0, 20.0);
      double b;
      try {
        b = laguerre_real_lower_bound(n, a, x, level).value / (2.0 * n);
      } catch (const ValidityError&) {
        continue;
      }
      ++got;
      const double r = oracle::oracle_ratio("laguerre-real", Params::n_alpha(n, a), x).value;
      c.expect(r > b, "laguerre level " + std::to_string(level) + " n=" + std::to_string(n) +
                          " a=" + num(a) + " x=" + num(x) + ": " + num(r) + " <= " + num(b));
    }
    c.expect(got == 200, "laguerre level " + std::to_string(level) + ": only " +
                             std::to_string(got) + " points");
  }
  const double h = oracle::oracle_ratio("hermite-real", Params::with_n(3), 3.0).value;
  c.expect(h == 90.0 / 17.0, "h_3(3) = " + num(h));
  const double b = hermite_real_lower_bound(3, 3.0, 1).value;
  c.expect(std::fabs(b - (3 + std::sqrt(5.0))) < 1e-14 && h > b, "level-1 bound " + num(b));
}

// 9. Perron-Kreuser limits at n = 100.
void perron_kreuser(Check& c) {
  for (double x : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
    const auto rd = recurrence_data(pcf_system<double>(), 100.0, x);
    const double h = oracle::oracle_ratio("pcf-u", Params::with_n(100), x).value;
    // y_n = e^{i pi n} U(n,x): h_n = -U(n,x)/U(n-1,x), the s = -1 root.
    const double d = rel(-h, rd.lambda_bar_minus);
    c.expect(d < 0.1, "pcf-u x=" + num(x) + ": deviation " + num(d));
  }
  for (double a : {0.5, 1.0, 2.0, 5.0}) {
    for (double x : {0.5, 1.0, 5.0, 20.0}) {
      // Index n = nu + 1 = 100 on the line sigma = nu + alpha.
      const double nu = 99.0;
      const auto rd = recurrence_data(laguerre_negative_system<double>(nu + a), 100.0, x);
      const double h = oracle::oracle_ratio("laguerre-neg", Params::nu_alpha(nu, a), x).value;
      const double d = rel(h, rd.lambda_bar_plus);
      c.expect(d < 0.1, "laguerre-neg a=" + num(a) + " x=" + num(x) + ": deviation " + num(d));
    }
  }
}

// 10. Structural identities.
void structural(Check& c) {
  std::mt19937_64 rng(10);
  auto uni = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  struct Sys {
    CoefficientSystem<double> sys;
    std::function<std::pair<double, double>()> draw;
  };
  std::vector<Sys> systems;
  systems.push_back({pcf_system<double>(), [&] { return std::pair{uni(0.6, 60), uni(-30, 30)}; }});
  systems.push_back({oblate_system<double>(1.5), [&] { return std::pair{uni(1.6, 40), uni(0.01, 30)}; }});
  systems.push_back({laguerre_negative_system<double>(3.7),
                     [&] { return std::pair{uni(0.1, 40), uni(0.01, 30)}; }});
  systems.push_back({bessel_i_system<double>(), [&] { return std::pair{uni(0.5, 40), uni(0.01, 30)}; }});
  systems.push_back({sign_normalized(bessel_k_raw_system<double>()),
                     [&] { return std::pair{uni(0.5, 40), uni(0.01, 30)}; }});
  systems.push_back({hermite_system<double>(), [&] {
                       const double n = uni(1, 30);
                       return std::pair{n, std::sqrt(2 * n + 2) + uni(0.01, 20)};
                     }});

  double worst_lambda = 0, worst_bar = 0;
  int samples = 0;
  while (samples < 10000) {
    auto& s = systems[static_cast<std::size_t>(samples) % systems.size()];
    const auto [n, x] = s.draw();
    const auto c0 = evaluate(s.sys, n, x), c1 = evaluate(s.sys, n + 1, x);
    const auto cd = characteristic_data(s.sys, n, x);
    const auto rd = recurrence_data(s.sys, n, x);
    for (double l : {cd.lambda_minus, cd.lambda_plus}) {
      worst_lambda = std::max(worst_lambda, relative_quadratic_residual(c0.e, c0.b - c0.a, c0.d, l));
    }
    for (double l : {rd.lambda_bar_minus, rd.lambda_bar_plus}) {
      worst_bar = std::max(worst_bar, relative_quadratic_residual(c1.e, c1.b - c0.a, c0.d, l));
    }
    ++samples;
  }
  c.expect(worst_lambda < 8 * kEps, "lambda residual " + num(worst_lambda / kEps) + " eps");
  c.expect(worst_bar < 8 * kEps, "lambda_bar residual " + num(worst_bar / kEps) + " eps");

  // The difference form R(-s eta + sqrt(1 + eta^2)) cancels for s * eta >> 1,
  // so the comparison runs where that term is not a difference of large numbers.
  Certification<double> inc;
  inc.root_direction = Direction::Increasing;
  double worst_f = 0;
  int compared = 0;
  for (int i = 0; i < 10000; ++i) {
    auto& s = systems[static_cast<std::size_t>(i) % 5];  // positive-product systems
    const auto [n, x] = s.draw();
    const double eta = characteristic_data(s.sys, n, x).eta;
    for (int sg : {-1, 1}) {
      if (sg * eta > 1) continue;
      const double f = first_pk_bound(s.sys, n, x, SolutionClass::minimal(sg), inc).value;
      worst_f = std::max(worst_f, rel(first_pk_value_difference_form(s.sys, n, x, sg), f));
      ++compared;
    }
  }
  c.expect(compared > 10000 && worst_f < 1e-14,
           "F forms differ by " + num(worst_f) + " over " + std::to_string(compared));

  double worst_s = 0;
  const auto pcf = pcf_system<double>();
  for (int i = 0; i < 2000; ++i) {
    const double n = uni(0.6, 50), x = uni(0, 30);
    const auto cls = SolutionClass::minimal(-1);
    const auto seq = refine_enclosure(pcf, n, x, cls, 1, 0.0);
    const auto sb = second_pk_bound_minimal(pcf, n, x, cls);
    const auto& e = seq.enclosures.at(1);
    worst_s = std::max(worst_s, rel(sb.side == BoundSide::LowerOnAbs ? e.lower : e.upper, sb.value));
  }
  const auto bi = bessel_i_system<double>();
  for (int i = 0; i < 2000; ++i) {
    const double n = uni(0.5, 40), x = uni(0.01, 30);
    const auto cls = SolutionClass::minimal(1);
    const auto seq = refine_enclosure(bi, n, x, cls, 1, 0.0);
    const auto sb = second_pk_bound_minimal(bi, n, x, cls);
    const auto& e = seq.enclosures.at(1);
    worst_s = std::max(worst_s, rel(sb.side == BoundSide::LowerOnAbs ? e.lower : e.upper, sb.value));
  }
  c.expect(worst_s < 1e-14, "depth-1 end differs from S_n^{s+} by " + num(worst_s));
}

}  // namespace

int main() {
  bool ok = true;
  ok &= report(1, "PCF-U enclosure containment", pcf_containment);
  ok &= report(2, "Refinement convergence", refinement);
  ok &= report(3, "Mills ratio", mills);
  ok &= report(4, "Iterated erfc", ierfc);
  ok &= report(5, "Log-derivative bracket", logderiv);
  ok &= report(6, "Turan chains", turan);
  ok &= report(7, "Zero bounds", zeros);
  ok &= report(8, "Hermite/Laguerre real-axis lower bounds", real_axis);
  ok &= report(9, "Perron-Kreuser limits", perron_kreuser);
  ok &= report(10, "Structural identities", structural);
  return ok ? 0 : 1;
}
