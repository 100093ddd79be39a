#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "ratio_bounds/bounds_engine.hpp"
#include "ratio_bounds/families/systems.hpp"

using namespace ratio_bounds;
using families::laguerre_negative_system;
using families::oblate_system;
using families::pcf_system;

namespace {

const SolutionClass kUMinimal = SolutionClass::minimal(-1);
const SolutionClass kReflected = SolutionClass::dominant(1);

CoefficientSystem<double> constant_system(double a, double b, double d, double e) {
  CoefficientSystem<double> s;
  s.name = "constant";
  s.a = [a](double, double) { return a; };
  s.b = [b](double, double) { return b; };
  s.d = [d](double, double) { return d; };
  s.e = [e](double, double) { return e; };
  return s;
}

Certification<double> increasing() {
  Certification<double> c;
  c.root_direction = Direction::Increasing;
  return c;
}

}  // namespace

TEST(FirstBound, PcfAtOrigin) {
  const auto b = first_pk_bound(pcf_system<double>(), 1.0, 0.0, kUMinimal);
  EXPECT_NEAR(b.value, std::sqrt(2.0), 1e-15);
  EXPECT_EQ(b.side, BoundSide::UpperOnAbs);
  EXPECT_EQ(b.provenance.kind, Provenance::Kind::PK1);
}

TEST(FirstBound, EtaZeroGivesR) {
  // eta = 0 at x = 0 for every n; R = sqrt(d/e) = 1/sqrt(n - 1/2).
  for (double n : {0.75, 2.0, 9.5}) {
    const auto b = first_pk_bound(pcf_system<double>(), n, 0.0, kUMinimal);
    EXPECT_NEAR(b.value, 1.0 / std::sqrt(n - 0.5), 1e-15);
  }
}

TEST(FirstBound, PcfMatchesClosedForm) {
  for (double n : {0.6, 1.0, 5.0}) {
    for (double x : {0.0, 0.5, 3.0, 40.0}) {
      const auto b = first_pk_bound(pcf_system<double>(), n, x, kUMinimal);
      EXPECT_NEAR(b.value / (2.0 / (x + std::sqrt(4 * n - 2 + x * x))), 1.0, 1e-15);
    }
  }
}

TEST(FirstBound, LaguerreNegativeArgument) {
  // nu = 0, alpha = 1: sigma = 1, index nu + 1 = 1.
  const auto b = first_pk_bound(laguerre_negative_system<double>(1.0), 1.0, 1.0,
                                SolutionClass::dominant(1));
  EXPECT_NEAR(b.value, 1.0 + std::sqrt(2.0), 1e-15);
  EXPECT_EQ(b.side, BoundSide::UpperOnAbs);
}

TEST(FirstBound, NegativeProductIsARegimeError) {
  const auto hermite = families::hermite_system<double>();
  EXPECT_THROW(first_pk_bound(hermite, 2.0, 3.0, SolutionClass::dominant(1)), RegimeError);
}

TEST(FirstBound, HypothesisFailureIsAValidityError) {
  Certification<double> cert = increasing();
  cert.hypothesis = [](double, double x) -> std::optional<std::string> {
    if (x < 0) return "x >= 0";
    return std::nullopt;
  };
  EXPECT_THROW(first_pk_bound(pcf_system<double>(), 1.0, -1.0, kUMinimal, cert), ValidityError);
  EXPECT_NO_THROW(first_pk_bound(pcf_system<double>(), 1.0, 1.0, kUMinimal, cert));
}

TEST(FirstBound, BothPrintedFormsAgree) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> un(0.6, 50.0), ux(-20.0, 20.0);
  const auto sys = pcf_system<double>();
  int compared = 0;
  for (int i = 0; i < 2000; ++i) {
    const double n = un(rng), x = ux(rng);
    const double eta = characteristic_data(sys, n, x).eta;
    for (int s : {-1, 1}) {
      // The difference form cancels for s * eta >> 1.
      if (s * eta > 1) continue;
      ++compared;
      const auto b = first_pk_bound(sys, n, x, SolutionClass::minimal(s), increasing());
      EXPECT_NEAR(first_pk_value_difference_form(sys, n, x, s) / b.value, 1.0, 1e-14);
    }
  }
  EXPECT_GT(compared, 2000);
}

TEST(SecondBoundMinimal, PcfAtOrigin) {
  const auto b = second_pk_bound_minimal(pcf_system<double>(), 1.0, 0.0, kUMinimal);
  EXPECT_NEAR(b.value, 2.0 / std::sqrt(6.0), 1e-15);
  EXPECT_EQ(b.side, BoundSide::LowerOnAbs);
  EXPECT_EQ(b.provenance.kind, Provenance::Kind::PK2Minimal);
}

TEST(SecondBoundMinimal, PcfMatchesClosedForm) {
  for (double n : {0.6, 1.0, 5.0}) {
    for (double x : {0.0, 0.5, 3.0, 40.0}) {
      const auto b = second_pk_bound_minimal(pcf_system<double>(), n, x, kUMinimal);
      EXPECT_NEAR(b.value / (2.0 / (x + std::sqrt(4 * n + 2 + x * x))), 1.0, 1e-14);
    }
  }
}

TEST(SecondBoundMinimal, ConstantSystemDegeneratesToFirst) {
  const auto sys = constant_system(0.0, 1.0, 2.0, 0.5);
  const auto cls = SolutionClass::minimal(1);
  const auto f = first_pk_bound(sys, 3.0, 0.0, cls, increasing());
  const auto s = second_pk_bound_minimal(sys, 3.0, 0.0, cls, increasing());
  EXPECT_NEAR(s.value, f.value, 1e-15);
  EXPECT_NE(s.side, f.side);
}

TEST(SecondBoundMinimal, RejectsDominantClassAndWrongSign) {
  EXPECT_THROW(second_pk_bound_minimal(pcf_system<double>(), 1.0, 0.0, kReflected), ClassError);
  // s = +1 has s * eta_bar < 0 for U at x > 0.
  EXPECT_THROW(second_pk_bound_minimal(pcf_system<double>(), 1.0, 2.0, SolutionClass::minimal(1)),
               ClassError);
}

TEST(SecondBoundDominant, ReflectedPcfAtOrigin) {
  const auto b = second_pk_bound_dominant(pcf_system<double>(), 2.0, 0.0, kReflected);
  EXPECT_NEAR(b.value, std::sqrt(2.0) / 3.0, 1e-15);
  EXPECT_EQ(b.side, BoundSide::LowerOnAbs);
  EXPECT_EQ(b.provenance.kind, Provenance::Kind::PK2Dominant);
}

TEST(SecondBoundDominant, ReflectedPcfMatchesClosedForm) {
  for (double n : {1.6, 2.0, 7.0}) {
    for (double t : {0.0, 0.5, 3.0, 20.0}) {
      const auto b = second_pk_bound_dominant(pcf_system<double>(), n, t, kReflected);
      EXPECT_NEAR(b.value / ((t + std::sqrt(4 * n - 6 + t * t)) / (2 * n - 1)), 1.0, 1e-14);
    }
  }
}

TEST(SecondBoundDominant, OblateP) {
  const double n = 3, m = 1, x = 1;
  const auto b = second_pk_bound_dominant(oblate_system<double>(m), n, x, kReflected);
  const double expected =
      (n * x + (n - 1) * std::sqrt(1 + x * x - m * m / ((n - 1) * (n - 1)))) / (n - m);
  EXPECT_NEAR(b.value, expected, 1e-14);
}

TEST(SecondBoundDominant, ConstantSystemDegeneratesToFirst) {
  const auto sys = constant_system(1.0, 0.0, 2.0, 0.5);
  const auto cls = SolutionClass::dominant(1);
  const auto f = first_pk_bound(sys, 3.0, 0.0, cls, increasing());
  const auto s = second_pk_bound_dominant(sys, 3.0, 0.0, cls, increasing());
  EXPECT_NEAR(s.value, f.value, 1e-15);
}

TEST(SecondBoundDominant, RejectsMinimalClass) {
  EXPECT_THROW(second_pk_bound_dominant(pcf_system<double>(), 2.0, 0.0, kUMinimal), ClassError);
}

TEST(SideLaw, FirstAndSecondBoundsAreOnOppositeSides) {
  const auto sys = pcf_system<double>();
  for (double x : {0.0, 1.0, 10.0}) {
    EXPECT_NE(first_pk_bound(sys, 2.0, x, kUMinimal).side,
              second_pk_bound_minimal(sys, 2.0, x, kUMinimal).side);
    EXPECT_NE(first_pk_bound(sys, 2.0, x, kReflected).side,
              second_pk_bound_dominant(sys, 2.0, x, kReflected).side);
  }
}

TEST(Enclosure, PcfAtOrigin) {
  const auto e = pk_enclosure(pcf_system<double>(), 1.0, 0.0, kUMinimal);
  EXPECT_NEAR(e.lower, 2.0 / std::sqrt(6.0), 1e-15);
  EXPECT_NEAR(e.upper, 2.0 / std::sqrt(2.0), 1e-15);
}

TEST(Enclosure, PcfDirectSubstitution) {
  const auto e = pk_enclosure(pcf_system<double>(), 5.0, 2.0, kUMinimal);
  EXPECT_NEAR(e.lower, 2.0 / (2.0 + std::sqrt(26.0)), 1e-15);
  EXPECT_NEAR(e.upper, 2.0 / (2.0 + std::sqrt(22.0)), 1e-15);
}

TEST(Enclosure, LaguerreNegativeBothTheorems) {
  // nu = 1, alpha = 1: sigma = 2, index 2.
  const auto e = pk_enclosure(laguerre_negative_system<double>(2.0), 2.0, 1.0,
                              SolutionClass::dominant(1));
  EXPECT_NEAR(e.lower, (1.0 + std::sqrt(13.0)) / 4.0, 1e-15);
  EXPECT_NEAR(e.upper, (2.0 + std::sqrt(12.0)) / 4.0, 1e-15);
}

TEST(Enclosure, InconsistentBoundsAreReported) {
  Bound<double> lo{2.0, BoundSide::LowerOnAbs, Provenance::pk1()};
  Bound<double> up{1.0, BoundSide::UpperOnAbs, Provenance::pk1()};
  EXPECT_THROW(enclosure_from_bounds(lo, up, "test"), InconsistentBoundsError);
  EXPECT_THROW(enclosure_from_bounds(up, up, "test"), InconsistentBoundsError);
}

TEST(Enclosure, LargeArgumentBoundsShareAsymptotics) {
  const auto e = pk_enclosure(pcf_system<double>(), 3.0, 1e3, kUMinimal);
  EXPECT_NEAR(e.upper / e.lower, 1.0, 1e-2);
}

TEST(LogDerivative, PcfAtOrigin) {
  const auto br = lg_logderiv_bounds(pcf_system<double>(), 2.0, 0.0, kUMinimal, increasing());
  // Bracket for U'(1,0)/U(1,0) comes from indices 1 and 2.
  EXPECT_NEAR(br.previous.lo, -std::sqrt(1.5), 1e-15);
  EXPECT_NEAR(br.previous.hi, -std::sqrt(0.5), 1e-15);
}

TEST(LogDerivative, SeparatorFormula) {
  // M_k = s(a+b)/2 + sqrt(de + ((b-a)/2)^2); for PCF a + b = 0.
  const double x = 2.0, k = 3.0;
  EXPECT_NEAR(lg_separator(pcf_system<double>(), k, x, -1), std::sqrt(x * x / 4 + k - 0.5),
              1e-15);
}

TEST(LogDerivative, NegativeProductIsARegimeError) {
  EXPECT_THROW(lg_separator(families::hermite_system<double>(), 3.0, 1.0, 1), RegimeError);
}
