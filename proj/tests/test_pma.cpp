#include <pmshape/error.hpp>
#include <pmshape/fixtures.hpp>
#include <pmshape/pma.hpp>
#include <pmshape/shape_core.hpp>

#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

using namespace pmshape;
using pmshape::testing::make_shape;
using pmshape::testing::multiset_distance;
using pmshape::testing::random_angle;
using pmshape::testing::random_shape;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

ShapeVector permuted(const ShapeVector& z, RandomStream& rng) {
    std::vector<Complex> out;
    for (auto i : rng.permutation(z.size())) out.push_back(z[i]);
    return ShapeVector(std::move(out));
}

// A gamma-fold shape from a random base of `base` points.
ShapeVector fold_shape(RandomStream& rng, int gamma, std::size_t base) {
    std::vector<Complex> b(base);
    for (auto& p : b) p = rng.complex_normal();
    return fixtures::replicate_fold(b, gamma);
}

}  // namespace

TEST(Conditioning, PowerNormalizedExample) {
    const std::vector<Complex> mu{0.0, -2.0};
    const auto s = condition_power_sums(mu, 5.0, {2, 1e-3, Conditioning::PowerNormalized}, true);
    EXPECT_NEAR(std::abs(s.at(2) - Complex(-0.5)), 0.0, 1e-15);
    EXPECT_EQ(s.at(1), Complex{});
    EXPECT_EQ(s.nonzero, std::vector<int>{2});
}

TEST(Conditioning, PrincipalAndGrowthScalings) {
    const std::vector<Complex> mu{3.0, 4.0, Complex{0.0, 12.0}};
    const auto pm = condition_power_sums(mu, 2.0, {3, 0.0, Conditioning::PrincipalMoment}, false);
    EXPECT_NEAR(std::abs(pm.at(3) - Complex(0.0, 1.0)), 0.0, 1e-15);
    const auto growth = condition_power_sums(mu, 2.0, {3, 0.0, Conditioning::ExpectedGrowth}, false);
    EXPECT_NEAR(std::abs(growth.at(2) - Complex(2.0)), 0.0, 1e-15);
}

TEST(Conditioning, ExactZerosStayZero) {
    const std::vector<Complex> mu{0.0, 0.0, 1.0};
    for (auto c : {Conditioning::PrincipalMoment, Conditioning::PowerNormalized, Conditioning::ExpectedGrowth}) {
        const auto s = condition_power_sums(mu, 1.0, {3, 1e-3, c}, false);
        EXPECT_EQ(s.at(1), Complex{});
        EXPECT_EQ(s.at(2), Complex{});
        EXPECT_EQ(s.nonzero, std::vector<int>{3});
    }
}

TEST(Conditioning, NormalizedShapeNeverUsesOrderOne) {
    RandomStream rng(51, 0);
    for (int t = 0; t < 100; ++t) {
        const auto s = condition_moments(normalize_shape(random_shape(rng, 2 + rng.below(30))));
        EXPECT_FALSE(s.is_nonzero(1));
        for (int k : s.nonzero) EXPECT_GT(std::abs(s.at(k)), s.threshold);
    }
}

TEST(Conditioning, RandomShapesHaveNonzeroMoments) {
    RandomStream rng(52, 0);
    for (int t = 0; t < 10000; ++t)
        ASSERT_FALSE(condition_moments(normalize_shape(random_shape(rng, 3 + rng.below(48)))).nonzero.empty());
}

TEST(Conditioning, LiteralPowerNormalizationInflatesRoundingZeros) {
    // Why the default differs: on an exact three-fold shape the moments of
    // orders not divisible by 3 are rounding noise, which |mu|^{1-k} blows up.
    const auto w = normalize_shape(fixtures::three_fold_contour(300));
    const auto literal = condition_moments(w, {20, 1e-3, Conditioning::PowerNormalized});
    EXPECT_EQ(fold_number(literal.nonzero), 1);
    const auto principal = condition_moments(w);
    EXPECT_EQ(fold_number(principal.nonzero), 3);
}

TEST(FoldNumber, Gcd) {
    EXPECT_EQ(fold_number(std::vector<int>{2, 4, 6}), 2);
    EXPECT_EQ(fold_number(std::vector<int>{2, 3}), 1);
    EXPECT_EQ(fold_number(std::vector<int>{3, 6, 9}), 3);
    EXPECT_EQ(fold_number(std::vector<int>{}), 0);
}

TEST(ContractShape, Powers) {
    RandomStream rng(53, 0);
    const auto w = normalize_shape(random_shape(rng, 12));
    const auto same = contract_shape(w, 1);
    for (std::size_t i = 0; i < w.size(); ++i) EXPECT_EQ(same[i], w.landmarks()[i]);

    const auto sq = contract_shape(normalize_shape(make_shape({1.0, -1.0})), 2);
    EXPECT_EQ(sq[0], Complex(1.0));
    EXPECT_EQ(sq[1], Complex(1.0));

    for (int gamma : {2, 3, 5}) {
        const auto mu = power_sums(w, 4 * gamma);
        const auto contracted = power_sums(contract_shape(w, gamma), 4);
        for (int k = 1; k <= 4; ++k)
            EXPECT_LE(std::abs(contracted.at(k) - mu.at(gamma * k)), 1e-9 * std::max(1.0, std::abs(mu.at(gamma * k))));
    }
}

TEST(PairOrientation, ThreePointShapeAndItsReflection) {
    const PmaOptions opts{};
    const auto z1 = fixtures::gc_counterexample();
    const auto s1 = condition_power_sums(power_sums(z1, 3).values(), 3.0, opts, true);
    const auto p1 = pair_orientation(s1, 2, 3);
    EXPECT_EQ(p1.l, 0);
    EXPECT_NEAR(p1.theta, 0.0, 1e-12);

    const auto s2 = condition_power_sums(power_sums(z1.rotated(kPi), 3).values(), 3.0, opts, true);
    const auto p2 = pair_orientation(s2, 2, 3);
    EXPECT_EQ(p2.l, 1);
    EXPECT_NEAR(std::abs(wrap_angle(p2.theta - kPi)), 0.0, 1e-12);

    const auto s3 = condition_power_sums(power_sums(z1.rotated(0.7), 3).values(), 3.0, opts, true);
    EXPECT_NEAR(pair_orientation(s3, 2, 3).theta, 0.7, 1e-9);
}

TEST(PairOrientation, RawValuesForThreePointShape) {
    const auto mu = power_sums(fixtures::gc_counterexample(), 3);
    EXPECT_NEAR(mu.at(2).real(), 1.625, 1e-15);
    EXPECT_NEAR(mu.at(3).real(), 0.5625, 1e-15);
}

TEST(PairOrientation, Preconditions) {
    const auto s = condition_moments(normalize_shape(fixtures::seven_landmarks()));
    EXPECT_EQ(kind_of([&] { (void)pair_orientation(s, 2, 4); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([&] { (void)pair_orientation(s, 1, 2); }), ErrorKind::InvalidArgument);
}

TEST(PairOrientation, IntervalRuleHoldsOnEveryPair) {
    RandomStream rng(54, 0);
    for (int t = 0; t < 200; ++t) {
        const auto est = orientation(random_shape(rng, 3 + rng.below(40)));
        ASSERT_FALSE(est.pairs.empty());
        for (const auto& p : est.pairs) {
            EXPECT_EQ(std::gcd(p.k, p.m), 1);
            EXPECT_GE(p.l, 0);
            EXPECT_LT(p.l, p.k);
            EXPECT_GT(p.theta, -kPi);
            EXPECT_LE(p.theta, kPi);
        }
    }
}

TEST(PairOrientation, ReevaluatedPhaseLiesInInterval) {
    RandomStream rng(55, 0);
    for (int t = 0; t < 200; ++t) {
        const auto spectrum = condition_moments(normalize_shape(random_shape(rng, 3 + rng.below(40))));
        for (auto [k, m] : select_pairs(spectrum.nonzero)) {
            const auto p = pair_orientation(spectrum, k, m);
            EXPECT_TRUE(in_pair_interval(pair_phase(spectrum, k, m, p.l), k));
            int hits = 0;
            for (int l = 0; l < k; ++l) hits += in_pair_interval(pair_phase(spectrum, k, m, l), k);
            EXPECT_EQ(hits, 1) << "k=" << k << " m=" << m;
        }
    }
}

TEST(SelectPairs, SmallestCoprimePartner) {
    using P = std::vector<std::pair<int, int>>;
    EXPECT_EQ(select_pairs(std::vector<int>{2, 3, 4, 6}), (P{{2, 3}, {3, 2}, {4, 3}}));
    EXPECT_EQ(select_pairs(std::vector<int>{1, 2}), (P{{1, 2}, {2, 1}}));
    EXPECT_TRUE(select_pairs(std::vector<int>{6, 10, 15}).empty());
    EXPECT_TRUE(select_pairs(std::vector<int>{1}).empty());
}

TEST(AngularMean, Examples) {
    const double deg = kPi / 180;
    EXPECT_NEAR(angular_mean(std::vector{1 * deg, 359 * deg}, std::vector{1.0, 1.0}), 0.0, 1e-12);
    EXPECT_NEAR(angular_mean(std::vector{2.5}, std::vector{0.3}), 2.5, 1e-15);
    EXPECT_EQ(kind_of([] { (void)angular_mean(std::vector{0.0, kPi}, std::vector{1.0, 1.0}); }),
              ErrorKind::ZeroResultant);
    EXPECT_EQ(kind_of([] { (void)angular_mean(std::vector{0.0}, std::vector{1.0, 1.0}); }),
              ErrorKind::InvalidArgument);
}

TEST(Orientation, ReflectedThreePointShapeDiffersByPi) {
    const auto z1 = fixtures::gc_counterexample();
    const double d = orientation(z1.rotated(kPi)).theta - orientation(z1).theta;
    EXPECT_NEAR(std::abs(wrap_angle(d - kPi)), 0.0, 1e-9);
}

TEST(Orientation, ThreeFoldShapeHasGammaThree) {
    const Complex a = 1.0 + 0.3 * std::polar(1.0, 0.5);
    const auto z = fixtures::replicate_fold(std::vector<Complex>{a}, 3);
    EXPECT_EQ(orientation(z).gamma, 3);
    EXPECT_EQ(orientation(fixtures::three_fold_contour()).gamma, 3);
}

TEST(Orientation, FivePointShapeIsOrientable) {
    const auto z = fixtures::five_point_cm_counterexample();
    const auto est = orientation(z);
    EXPECT_EQ(est.gamma, 1);
    for (double phi : {0.3, -1.2, 2.9}) {
        const auto rotated = orientation(z.rotated(phi));
        EXPECT_LE(std::abs(wrap_angle(rotated.theta - est.theta - phi)), 1e-9);
    }
}

TEST(Orientation, Equivariance) {
    RandomStream rng(56, 0);
    for (int t = 0; t < 300; ++t) {
        const auto z = random_shape(rng, 3 + rng.below(48));
        const double phi = random_angle(rng);
        const auto a = orientation(z);
        const auto b = orientation(z.rotated(phi));
        ASSERT_EQ(a.gamma, 1);
        EXPECT_LE(std::abs(wrap_angle(b.theta - a.theta - phi)), 1e-6);
    }
}

TEST(Orientation, FoldAwareEquivariance) {
    RandomStream rng(57, 0);
    for (int gamma : {2, 3, 4, 5}) {
        for (int t = 0; t < 50; ++t) {
            const auto z = fold_shape(rng, gamma, 2 + rng.below(6));
            const double phi = random_angle(rng);
            const auto a = orientation(z);
            const auto b = orientation(z.rotated(phi));
            ASSERT_EQ(a.gamma, gamma);
            ASSERT_EQ(b.gamma, gamma);
            EXPECT_LE(std::abs(wrap_period(b.theta - a.theta - phi, kTwoPi / gamma)), 1e-6);
        }
    }
}

TEST(Orientation, PermutationInvariance) {
    RandomStream rng(58, 0);
    for (int t = 0; t < 100; ++t) {
        const auto z = random_shape(rng, 3 + rng.below(300));
        EXPECT_LE(std::abs(wrap_angle(orientation(permuted(z, rng)).theta - orientation(z).theta)), 1e-9);
    }
}

TEST(Orientation, RegularPolygonHasNoUsableMoment) {
    std::vector<Complex> base{1.0};
    EXPECT_EQ(kind_of([&] { (void)orientation(fixtures::replicate_fold(base, 23)); }), ErrorKind::AllMomentsZero);
}

TEST(OrientSpectrum, LoneFirstOrder) {
    ConditionedSpectrum s;
    s.values = {Complex{0.0, 2.0}};
    s.nonzero = {1};
    s.threshold = 1e-3;
    auto none = [](int) -> ConditionedSpectrum { throw Error(ErrorKind::Internal, "unused"); };
    const auto est = orient_spectrum(s, none, true);
    EXPECT_NEAR(est.theta, kPi / 2, 1e-15);
    EXPECT_EQ(kind_of([&] { (void)orient_spectrum(s, none, false); }), ErrorKind::DegenerateSpectrum);
}

TEST(OrientSpectrum, NoCoprimePair) {
    ConditionedSpectrum s;
    s.values.assign(15, Complex{});
    for (int k : {6, 10, 15}) s.values[k - 1] = 1.0;
    s.nonzero = {6, 10, 15};
    auto none = [](int) -> ConditionedSpectrum { throw Error(ErrorKind::Internal, "unused"); };
    EXPECT_EQ(kind_of([&] { (void)orient_spectrum(s, none, true); }), ErrorKind::DegenerateSpectrum);
    s.nonzero.clear();
    EXPECT_EQ(kind_of([&] { (void)orient_spectrum(s, none, true); }), ErrorKind::AllMomentsZero);
}

TEST(OrientShape, InvariantToRotationAndPermutation) {
    RandomStream rng(59, 0);
    for (int t = 0; t < 100; ++t) {
        const auto z = random_shape(rng, 3 + rng.below(30));
        const auto reference = orient_shape(z);
        const auto transformed = orient_shape(permuted(z.rotated(random_angle(rng)), rng));
        EXPECT_LE(multiset_distance(transformed.landmarks(), reference.landmarks()), 1e-6);
    }
}

TEST(OrientShape, FoldShapeOneStepRotation) {
    RandomStream rng(60, 0);
    for (int gamma : {2, 3, 5}) {
        const auto z = fold_shape(rng, gamma, 3);
        const auto a = orient_shape(z);
        const auto b = orient_shape(z.rotated(kTwoPi / gamma));
        EXPECT_LE(multiset_distance(a.landmarks(), b.landmarks()), 1e-6);
    }
}

TEST(OrientShape, Idempotent) {
    RandomStream rng(61, 0);
    for (int t = 0; t < 50; ++t) {
        const auto once = orient_shape(random_shape(rng, 3 + rng.below(30)));
        const auto twice = orient_shape(once.shape());
        for (std::size_t i = 0; i < once.size(); ++i)
            EXPECT_LE(std::abs(once.landmarks()[i] - twice.landmarks()[i]), 1e-9);
    }
}
