#include <pmshape/error.hpp>
#include <pmshape/types.hpp>

#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace pmshape;
using pmshape::testing::make_shape;

TEST(WrapAngle, MapsIntoHalfOpenCircle) {
    EXPECT_DOUBLE_EQ(wrap_angle(kPi), kPi);
    EXPECT_DOUBLE_EQ(wrap_angle(-kPi), kPi);
    EXPECT_NEAR(wrap_angle(3 * kPi), kPi, 1e-12);
    EXPECT_NEAR(wrap_angle(0.5 + 4 * kPi), 0.5, 1e-12);
    EXPECT_NEAR(wrap_angle(-0.5 - 4 * kPi), -0.5, 1e-12);
}

TEST(WrapPeriod, UsesHalfPeriodBounds) {
    const double period = kTwoPi / 3;
    EXPECT_NEAR(wrap_period(period + 0.1, period), 0.1, 1e-12);
    EXPECT_NEAR(wrap_period(-0.5 * period, period), 0.5 * period, 1e-12);
    EXPECT_LE(std::abs(wrap_period(1.0, period)), 0.5 * period);
}

TEST(PrincipalArg, FoldsNegativeZeroImaginaryOntoPi) {
    EXPECT_DOUBLE_EQ(principal_arg({-1.0, -0.0}), kPi);
    EXPECT_DOUBLE_EQ(principal_arg({-1.0, 0.0}), kPi);
    EXPECT_DOUBLE_EQ(principal_arg({0.0, 1.0}), kPi / 2);
}

TEST(ShapeVector, RejectsEmptyAndNonFinite) {
    EXPECT_THROW(make_shape({}), Error);
    EXPECT_THROW(make_shape({Complex{std::numeric_limits<double>::quiet_NaN(), 0.0}}), Error);
    EXPECT_THROW(make_shape({Complex{0.0, std::numeric_limits<double>::infinity()}}), Error);
}

TEST(ShapeVector, RotatedMultipliesByPhase) {
    const ShapeVector z({1.0, {0.0, 2.0}});
    const auto r = z.rotated(kPi / 2);
    EXPECT_NEAR(std::abs(r[0] - Complex{0.0, 1.0}), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(r[1] - Complex{-2.0, 0.0}), 0.0, 1e-15);
}

TEST(MomentSpectrum, OrdersAreOneBased) {
    const MomentSpectrum s(MomentKind::PowerSum, {1.0, 2.0});
    EXPECT_EQ(s.max_order(), 2);
    EXPECT_EQ(s.at(2), Complex(2.0));
    EXPECT_THROW((void)s.at(0), Error);
    EXPECT_THROW((void)s.at(3), Error);
}

TEST(ErrorKind, DistinctMessages) {
    EXPECT_EQ(to_string(ErrorKind::DegenerateSpectrum), "degenerate moment spectrum");
    EXPECT_NE(to_string(ErrorKind::AllMomentsZero), to_string(ErrorKind::DegenerateShape));
    EXPECT_NE(to_string(ErrorKind::ZeroMass), to_string(ErrorKind::DegenerateSpectrum));
}
