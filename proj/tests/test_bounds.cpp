#include <gtest/gtest.h>

#include "filtreg/bounds.hpp"
#include "filtreg/errors.hpp"

using namespace filtreg;

TEST(Bounds, AssocGraded) {
  EXPECT_EQ(bound_assoc_graded(1, 2, 0), 1);
  EXPECT_EQ(bound_assoc_graded(2, 1, 0), 2);
  EXPECT_EQ(bound_assoc_graded(3, 4, 1), 7773);
  EXPECT_THROW(bound_assoc_graded(0, 1, 0), InvalidDimension);
}

TEST(Bounds, HilbertCoefficients) {
  EXPECT_EQ(bound_hilbert_coeff(0, 2, 2, 5), 2);
  EXPECT_EQ(bound_hilbert_coeff(1, 2, 2, 0), 2);
  EXPECT_EQ(bound_hilbert_coeff(2, 2, 1, 0), 32);
  EXPECT_THROW(bound_hilbert_coeff(3, 2, 1, 0), IndexOutOfRange);
}

TEST(Bounds, GradedHdeg) {
  EXPECT_EQ(bound_graded_hdeg(1, 2, 1, 0), 1);
  EXPECT_EQ(bound_graded_hdeg(2, 4, 1, 0), 287);
  for (int l = 1; l < 8; ++l) EXPECT_EQ(bound_graded_hdeg(1, l, 1, 0), l - 1);
}

TEST(Bounds, CorollaryAgainstGradedHdegSpecialization) {
  for (int l = 1; l <= 6; ++l) EXPECT_EQ(bound_corollary(1, l), bound_graded_hdeg(1, l, 1, 0));
  // For d >= 2 the corollary keeps l(A/I) unpowered.
  for (int d = 2; d <= 4; ++d)
    for (int l = 1; l <= 6; ++l) EXPECT_LE(bound_corollary(d, l), bound_graded_hdeg(d, l, 1, 0));
  EXPECT_EQ(bound_corollary(2, 3), 14);
}

TEST(Bounds, GradedRegM) {
  EXPECT_EQ(bound_graded_regM(1, 2, 1, 0, 0, 1, 0), 1);
  EXPECT_EQ(bound_graded_regM(1, 4, 1, 1, 0, 2, 0), 15);
  EXPECT_EQ(bound_graded_regM(2, 1, 1, 0, 0, 2, 0), 2);
}

TEST(Bounds, Equigenerated) {
  EXPECT_EQ(bound_equigenerated(1, 2, 0, 1, 0, 1), 2);
  EXPECT_EQ(bound_equigenerated(2, 4, 0, 0, 0, 2), 34);
  EXPECT_EQ(bound_equigenerated(2, 4, 1, 0, 0, 2), 47);
}

TEST(Bounds, Fiber) {
  EXPECT_EQ(bound_fiber(1, 2, 0, FiberMode::Reg), 7);
  EXPECT_EQ(bound_fiber(2, 1, 0, FiberMode::Reg), 7);
  EXPECT_EQ(bound_fiber(1, 2, 1, FiberMode::A0), 3);
  EXPECT_EQ(bound_fiber(2, 2, 1, FiberMode::E0), 12);
  EXPECT_EQ(bound_fiber(2, 1, 0, FiberMode::Ei, 1), 2 * 243);
  EXPECT_THROW(bound_fiber(2, 1, 0, FiberMode::Ei, 2), IndexOutOfRange);
}

TEST(Bounds, FiberClassical) {
  EXPECT_EQ(bound_fiber_classical(1, 2), 7);
  EXPECT_EQ(bound_fiber_classical(2, 1), 7);
  EXPECT_EQ(bound_fiber_classical(3, 1), 240);
  EXPECT_EQ(bound_fiber_classical(2, 4), 49);
  for (int d = 1; d <= 4; ++d)
    for (int D = 1; D <= 5; ++D) EXPECT_EQ(bound_fiber_classical(d, D), bound_fiber(d, D, 0, FiberMode::Reg));
}

TEST(Bounds, FiberGraded) {
  EXPECT_EQ(bound_fiber_graded(1, 2, 1, 0), 7);
  EXPECT_EQ(bound_fiber_graded(2, 1, 1, 0), 7);
  EXPECT_EQ(bound_fiber_graded(3, 1, 1, 1), 1021);
}

TEST(Bounds, HilbertSamuelBinomial) {
  EXPECT_EQ(bound_hs_binomial(0, 2, 4), 4);
  EXPECT_EQ(bound_hs_binomial(2, 2, 4), 24);
  EXPECT_EQ(bound_hs_binomial(1, 1, 2), 4);
}

TEST(Bounds, LargeDimensionIsExact) {
  // (2+0+1)^{3*4!-1} - 5 = 3^71 - 5.
  BigInt expected = 1;
  for (int k = 0; k < 71; ++k) expected *= 3;
  EXPECT_EQ(bound_assoc_graded(5, 2, 0), expected - 5);
  EXPECT_GT(to_decimal(bound_assoc_graded(5, 2, 0)).size(), 16u);
}

TEST(Bounds, MonotoneInEachArgument) {
  for (int d = 1; d <= 3; ++d)
    for (int a = 1; a <= 4; ++a)
      for (int b = 0; b <= 3; ++b) {
        EXPECT_LE(bound_assoc_graded(d, a, b), bound_assoc_graded(d, a + 1, b));
        EXPECT_LE(bound_assoc_graded(d, a, b), bound_assoc_graded(d, a, b + 1));
        EXPECT_LE(bound_graded_hdeg(d, a, 1, b), bound_graded_hdeg(d, a + 1, 1, b));
        EXPECT_LE(bound_graded_hdeg(d, 1, a, b), bound_graded_hdeg(d, 1, a + 1, b));
        EXPECT_LE(bound_equigenerated(d, a, b, 1, 0, 1), bound_equigenerated(d, a + 1, b, 1, 0, 1));
        EXPECT_LE(bound_equigenerated(d, a, b, 1, 0, 1), bound_equigenerated(d, a, b, 2, 0, 1));
        EXPECT_LE(bound_fiber(d, a, b, FiberMode::Reg), bound_fiber(d, a + 1, b, FiberMode::Reg));
        EXPECT_LE(bound_fiber(d, a, b, FiberMode::Reg), bound_fiber(d, a, b + 1, FiberMode::Reg));
        EXPECT_LE(bound_fiber(d, a, b, FiberMode::A0), bound_fiber(d, a + 1, b, FiberMode::A0));
        EXPECT_LE(bound_hilbert_coeff(d, d, a, b), bound_hilbert_coeff(d, d, a + 1, b));
        EXPECT_LE(bound_hilbert_coeff(d, d, a, b), bound_hilbert_coeff(d, d, a, b + 1));
        EXPECT_LE(bound_graded_regM(d, a, 1, b, 0, 2, 0), bound_graded_regM(d, a, 1, b + 1, 0, 2, 0));
        EXPECT_LE(bound_graded_regM(d, a, 1, b, 0, 2, 0), bound_graded_regM(d, a + 1, 1, b, 0, 2, 0));
      }
}
