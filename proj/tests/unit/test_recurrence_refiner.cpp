#include <cmath>
#include <limits>
#include <vector>

#include <gtest/gtest.h>

#include "ratio_bounds/families/systems.hpp"
#include "ratio_bounds/recurrence_refiner.hpp"

using namespace ratio_bounds;
using families::hermite_system;
using families::pcf_system;

namespace {

const SolutionClass kUMinimal = SolutionClass::minimal(-1);
const double kInf = std::numeric_limits<double>::infinity();

Bound<double> lower(double v) { return {v, BoundSide::LowerOnAbs, Provenance::pk1(), true, {}}; }
Bound<double> upper(double v) { return {v, BoundSide::UpperOnAbs, Provenance::pk1(), true, {}}; }

}  // namespace

TEST(StepDown, PcfLowerBoundIsAFixedPointAtOrigin) {
  // |h_1| = 1/(3/2 |h_2|) at x = 0, so 2/sqrt(6) maps to itself.
  const auto b = ttrr_step_down(pcf_system<double>(), 1.0, 0.0, lower(2.0 / std::sqrt(6.0)),
                                kUMinimal);
  EXPECT_NEAR(b.value, 2.0 / std::sqrt(6.0), 1e-15);
  EXPECT_EQ(b.side, BoundSide::UpperOnAbs);
  EXPECT_EQ(b.provenance.kind, Provenance::Kind::Iterated);
  EXPECT_EQ(b.provenance.depth, 1);
}

TEST(StepDown, SidesAlternateForPcf) {
  const auto sys = pcf_system<double>();
  auto b = upper(0.3);
  for (int k = 5; k >= 1; --k) {
    const auto next = ttrr_step_down(sys, double(k), 2.0, b, kUMinimal);
    EXPECT_NE(next.side, b.side);
    b = next;
  }
  EXPECT_EQ(b.provenance.depth, 5);
}

TEST(StepDown, InfiniteInputIsVacuous) {
  const auto b = ttrr_step_down(pcf_system<double>(), 1.0, 1.0, upper(kInf), kUMinimal);
  EXPECT_EQ(b.side, BoundSide::LowerOnAbs);
  EXPECT_EQ(b.value, 0.0);
}

TEST(StepDown, WrongSignDenominator) {
  // With s = +1 the denominator -x + (3/2)v is negative for v = 0.5.
  EXPECT_THROW(ttrr_step_down(pcf_system<double>(), 1.0, 1.0, upper(0.5),
                              SolutionClass::minimal(1)),
               DenominatorSignError);
}

TEST(StepDown, RejectsDominantClass) {
  EXPECT_THROW(ttrr_step_down(pcf_system<double>(), 1.0, 1.0, upper(0.5),
                              SolutionClass::dominant(1)),
               ClassError);
}

TEST(StepUp, HermiteIsExactFromExactInput) {
  // H_1/H_0 = 2x; H_2/H_1 = (4x^2 - 2)/(2x).
  const double x = 3.0;
  const auto b = ttrr_step_up(hermite_system<double>(), 2.0, x, lower(2 * x),
                              SolutionClass::dominant(1));
  EXPECT_NEAR(b.value, 34.0 / 6.0, 1e-14);
  EXPECT_EQ(b.side, BoundSide::LowerOnAbs);
}

TEST(StepUp, ReflectedPcfAtOrigin) {
  const auto b = ttrr_step_up(pcf_system<double>(), 3.0, 0.0, upper(2.0 / std::sqrt(6.0)),
                              SolutionClass::dominant(1));
  EXPECT_NEAR(b.value, std::sqrt(6.0) / 5.0, 1e-15);
  EXPECT_EQ(b.side, BoundSide::LowerOnAbs);
}

TEST(StepUp, NegativeLowerBoundIsClamped) {
  const auto b = ttrr_step_up(hermite_system<double>(), 2.0, 0.1, lower(0.5),
                              SolutionClass::dominant(1));
  EXPECT_EQ(b.value, 0.0);
  EXPECT_THROW(ttrr_step_up(hermite_system<double>(), 2.0, 0.1, upper(0.5),
                            SolutionClass::dominant(1)),
               DenominatorSignError);
}

TEST(StepUp, RejectsMinimalClass) {
  EXPECT_THROW(ttrr_step_up(pcf_system<double>(), 2.0, 0.0, upper(1.0), kUMinimal), ClassError);
}

TEST(Refine, DepthZeroIsTheFirstEnclosure) {
  const auto sys = pcf_system<double>();
  const auto seq = refine_enclosure(sys, 1.0, 5.0, kUMinimal, 0);
  ASSERT_EQ(seq.enclosures.size(), 1u);
  const auto pk = pk_enclosure(sys, 1.0, 5.0, kUMinimal);
  EXPECT_EQ(seq.last().lower, pk.lower);
  EXPECT_EQ(seq.last().upper, pk.upper);
}

TEST(Refine, DepthOneStepsDownTheNextEnclosure) {
  const auto sys = pcf_system<double>();
  const auto seq = refine_enclosure(sys, 1.0, 5.0, kUMinimal, 1);
  ASSERT_EQ(seq.enclosures.size(), 2u);
  const auto top = pk_enclosure(sys, 2.0, 5.0, kUMinimal);
  // |h_1| = 1/(5 + (3/2)|h_2|): the upper end comes from the lower end.
  EXPECT_NEAR(seq.last().upper, 1.0 / (5.0 + 1.5 * top.lower), 1e-15);
  EXPECT_NEAR(seq.last().lower, 1.0 / (5.0 + 1.5 * top.upper), 1e-15);
}

TEST(Refine, EnclosuresNestAndShrink) {
  const auto seq = refine_enclosure(pcf_system<double>(), 1.0, 5.0, kUMinimal, 16, 0.0);
  ASSERT_GE(seq.enclosures.size(), 5u);
  for (std::size_t i = 1; i < seq.enclosures.size(); ++i) {
    const auto& a = seq.enclosures[i - 1];
    const auto& b = seq.enclosures[i];
    EXPECT_GE(b.lower, a.lower * (1 - 1e-15));
    EXPECT_LE(b.upper, a.upper * (1 + 1e-15));
    EXPECT_LE(b.width(), a.width());
  }
  // U(1,5)/U(0,5) to 30 digits.
  const double ref = 0.18955765064714479420911704631;
  EXPECT_LE(seq.last().lower, ref * (1 + 1e-15));
  EXPECT_GE(seq.last().upper, ref * (1 - 1e-15));
  EXPECT_LT(seq.final_width_rel, 1e-12);
}

TEST(Refine, StopsAtTolerance) {
  const auto seq = refine_enclosure(pcf_system<double>(), 1.0, 5.0, kUMinimal, 64, 1e-6);
  EXPECT_TRUE(seq.converged);
  EXPECT_LT(seq.final_width_rel, 1e-6);
  EXPECT_LT(seq.enclosures.size(), 65u);
}

TEST(Refine, DepthOutOfRange) {
  EXPECT_THROW(refine_enclosure(pcf_system<double>(), 1.0, 5.0, kUMinimal, -1), DomainError);
  EXPECT_THROW(refine_enclosure(pcf_system<double>(), 1.0, 5.0, kUMinimal, 65), DomainError);
  EXPECT_THROW(refine_enclosure(pcf_system<double>(), 1.0, 5.0, SolutionClass::dominant(1), 3),
               ClassError);
}

TEST(ContinuedFraction, MillsConvergentsAtOrigin) {
  // R_1(0) and R_2(0): tails 1/T_1 = 1 and 2/T_2 = sqrt(2).
  const std::vector<double> p{1.0}, q{0.0};
  EXPECT_DOUBLE_EQ(cf_evaluate_with_tail<double>(p, q, 1.0), 1.0);
  const std::vector<double> p2{1.0, 1.0}, q2{0.0, 0.0};
  EXPECT_DOUBLE_EQ(cf_evaluate_with_tail<double>(p2, q2, std::sqrt(2.0)), std::sqrt(2.0));
}

TEST(ContinuedFraction, EmptyFractionReturnsTail) {
  const std::vector<double> none;
  EXPECT_EQ(cf_evaluate_with_tail<double>(none, none, 0.25), 0.25);
}

TEST(ContinuedFraction, Errors) {
  const std::vector<double> p{1.0}, q{0.0}, q2{0.0, 1.0};
  EXPECT_THROW(cf_evaluate_with_tail<double>(p, q, 0.0), ZeroDivisorError);
  EXPECT_THROW(cf_evaluate_with_tail<double>(p, q2, 1.0), DomainError);
}

TEST(Turan, CombinesEnclosures) {
  Enclosure<double> a, b;
  a.lower = 1.0;
  a.upper = 2.0;
  b.lower = 0.5;
  b.upper = 4.0;
  const auto t = turan_enclosure(a, b);
  EXPECT_EQ(t.lower, 0.25);
  EXPECT_EQ(t.upper, 4.0);
}

TEST(Turan, DegenerateInputsGiveVacuousEnds) {
  Enclosure<double> a, b;
  a.lower = 1.0;
  a.upper = 2.0;
  b.lower = 0.0;
  b.upper = kInf;
  const auto t = turan_enclosure(a, b);
  EXPECT_EQ(t.lower, 0.0);
  EXPECT_TRUE(std::isinf(t.upper));
}

TEST(Turan, PcfFromSystem) {
  // U(1,x)^2/(U(0,x) U(2,x)) at x = 0.5.
  const double ref = 1.26734144669035482902762061411;
  const auto t = turan_enclosure(pcf_system<double>(), 1.0, 0.5, kUMinimal, kUMinimal);
  EXPECT_LE(t.lower, ref);
  EXPECT_GE(t.upper, ref);
}
