#include <pmshape/error.hpp>
#include <pmshape/experiments.hpp>
#include <pmshape/fixtures.hpp>
#include <pmshape/shape_core.hpp>

#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

using namespace pmshape;
using pmshape::testing::make_shape;
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

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const auto n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

TEST(Pca, Examples) {
    EXPECT_NEAR(pca_orientation(normalize_shape(make_shape({-1.0, 1.0}))), 0.0, 1e-15);
    EXPECT_NEAR(pca_orientation(normalize_shape(make_shape({Complex{0, -1}, Complex{0, 1}}))), kPi / 2, 1e-15);
    EXPECT_EQ(kind_of([] { (void)pca_orientation(normalize_shape(make_shape({1.0, -1.0, {0, 1}, {0, -1}}))); }),
              ErrorKind::AxisUndefined);
}

TEST(Pca, RangeIsHalfOpen) {
    RandomStream rng(81, 0);
    for (int t = 0; t < 200; ++t) {
        const double a = pca_orientation(normalize_shape(random_shape(rng, 10)));
        EXPECT_GE(a, 0.0);
        EXPECT_LT(a, kPi);
    }
}

TEST(Noise, ZeroSigmaIsIdentityAndSeedsRepeat) {
    const auto z = fixtures::seven_landmarks();
    const auto same = add_noise(z, 0.0, 1);
    for (std::size_t i = 0; i < z.size(); ++i) EXPECT_EQ(same[i], z[i]);
    const auto a = add_noise(z, 0.1, 5);
    const auto b = add_noise(z, 0.1, 5);
    const auto c = add_noise(z, 0.1, 6);
    for (std::size_t i = 0; i < z.size(); ++i) {
        EXPECT_EQ(a[i], b[i]);
        EXPECT_NE(a[i], c[i]);
    }
    EXPECT_THROW((void)add_noise(z, -1.0, 0), Error);
}

TEST(Noise, PerCoordinateVariance) {
    const double sigma = 0.3;
    const auto z = add_noise(ShapeVector(std::vector<Complex>(10000, Complex{})), sigma, 17);
    double sx = 0.0;
    double sy = 0.0;
    for (const Complex& p : z) {
        sx += p.real() * p.real();
        sy += p.imag() * p.imag();
    }
    const double var = sigma * sigma;
    EXPECT_GE(sx / 10000, 0.95 * var);
    EXPECT_LE(sx / 10000, 1.05 * var);
    EXPECT_GE(sy / 10000, 0.95 * var);
    EXPECT_LE(sy / 10000, 1.05 * var);
}

TEST(DropLandmarks, KeepsRequestedShare) {
    const auto z = fixtures::elongated_contour(200);
    EXPECT_EQ(drop_landmarks(z, 0.0, 1).size(), 200u);
    EXPECT_EQ(drop_landmarks(z, 0.5, 1).size(), 100u);
    EXPECT_EQ(drop_landmarks(z, 0.95, 1).size(), 10u);
    EXPECT_EQ(drop_landmarks(fixtures::seven_landmarks(), 0.95, 1).size(), 3u);
    EXPECT_THROW((void)drop_landmarks(z, 0.96, 1), Error);
}

TEST(Classifier, QueryEqualsPrototype) {
    std::vector<LabeledShape> protos;
    for (int i = 0; i < 5; ++i) protos.push_back({"s" + std::to_string(i), fixtures::gaussian_shape(12, 90, i)});
    for (int i = 0; i < 5; ++i) {
        const auto r = classify_1nn(protos[i].shape, protos, 0.1);
        EXPECT_EQ(r.index, static_cast<std::size_t>(i));
        EXPECT_EQ(r.distance, 0.0);
    }
}

TEST(Classifier, RotatedPermutedScaledTranslatedQuery) {
    RandomStream rng(82, 0);
    std::vector<LabeledShape> protos;
    for (int i = 0; i < 10; ++i) protos.push_back({"s" + std::to_string(i), fixtures::gaussian_shape(15, 91, i)});
    const NearestNeighborClassifier clf(protos, 0.1);
    for (int t = 0; t < 100; ++t) {
        const auto label = rng.below(10);
        std::vector<Complex> q;
        const double phi = random_angle(rng);
        const double scale = 0.5 + 3 * rng.uniform();
        const Complex shift = 10.0 * rng.complex_normal();
        for (auto i : rng.permutation(15)) q.push_back(scale * protos[label].shape[i] * std::polar(1.0, phi) + shift);
        EXPECT_EQ(clf.classify(ShapeVector(q)).index, label);
    }
}

TEST(Classifier, TiesGoToLowestIndex) {
    const auto z = fixtures::seven_landmarks();
    const std::vector<LabeledShape> protos{{"a", z}, {"b", z}};
    EXPECT_EQ(classify_1nn(z.rotated(1.0), protos, 0.1).label, "a");
}

TEST(Classifier, UnorientableShapesFallBackToMagnitudes) {
    const auto polygon = fixtures::replicate_fold(std::vector<Complex>{1.0}, 23);
    const auto entry = prepare_entry(polygon, 0.1);
    EXPECT_FALSE(entry.oriented);
    const std::vector<LabeledShape> protos{{"polygon", polygon}, {"seven", fixtures::seven_landmarks()}};
    const auto r = classify_1nn(polygon.rotated(0.3), protos, 0.1);
    EXPECT_EQ(r.label, "polygon");
    EXPECT_FALSE(r.oriented);
}

TEST(Sweep, NoiseFreeAsymmetricShapeIsExact) {
    ExperimentConfig cfg;
    cfg.sweep_steps = 72;
    const auto rows = rotation_sweep(fixtures::elongated_contour(), cfg);
    ASSERT_EQ(rows.size(), 72u);
    EXPECT_NEAR(rows.front().true_angle, -kPi + kTwoPi / 72, 1e-15);
    EXPECT_NEAR(rows.back().true_angle, kPi, 1e-15);
    for (const auto& r : rows) {
        ASSERT_TRUE(r.pma_ok);
        EXPECT_EQ(r.gamma, 1);
        EXPECT_LE(r.pma_error, 1e-6);
    }
}

TEST(Sweep, NoiseFreeThreeFoldShape) {
    ExperimentConfig cfg;
    const auto rows = rotation_sweep(fixtures::three_fold_contour(), cfg);
    for (const auto& r : rows) {
        EXPECT_EQ(r.gamma, 3);
        ASSERT_TRUE(r.pma_ok);
        EXPECT_LE(r.pma_error, 1e-6);
        EXPECT_FALSE(r.pca_ok);
        EXPECT_TRUE(std::isnan(r.pca_error));
    }
}

TEST(Sweep, PcaIsBimodalWhilePmaIsNot) {
    ExperimentConfig cfg;
    cfg.noise_sigma = 0.01;
    cfg.seed = 3;
    const auto rows = rotation_sweep(fixtures::elongated_contour(), cfg);
    int pca_flips = 0;
    int pma_flips = 0;
    for (const auto& r : rows) {
        pca_flips += r.pca_error > kPi / 2;
        pma_flips += r.pma_error > kPi / 2;
    }
    EXPECT_GT(pca_flips, 0.2 * rows.size());
    EXPECT_LT(pma_flips, 0.01 * rows.size());
}

TEST(Sweep, ErrorsStayWithinHalfFold) {
    ExperimentConfig cfg;
    cfg.noise_sigma = 0.05;
    cfg.seed = 9;
    for (const auto& z : {fixtures::elongated_contour(), fixtures::three_fold_contour()})
        for (const auto& r : rotation_sweep(z, cfg))
            if (r.pma_ok) EXPECT_LE(r.pma_error, kPi / r.gamma + 1e-12);
}

TEST(Sweep, Deterministic) {
    ExperimentConfig cfg;
    cfg.noise_sigma = 0.02;
    cfg.drop_fraction = 0.5;
    cfg.seed = 77;
    std::ostringstream a;
    std::ostringstream b;
    write_sweep_csv(a, rotation_sweep(fixtures::elongated_contour(), cfg));
    write_sweep_csv(b, rotation_sweep(fixtures::elongated_contour(), cfg));
    EXPECT_EQ(a.str(), b.str());
    EXPECT_EQ(a.str().substr(0, a.str().find('\n')), "true_angle,pma,pca,err_pma,err_pca,gamma");
}

// Heavier subsampling can flip the weakly asymmetric contour by pi; half density must not.
TEST(Sweep, HalfDensityShapesStayOriented) {
    ExperimentConfig cfg;
    cfg.drop_fraction = 0.5;
    cfg.seed = 4;
    for (const auto& r : rotation_sweep(fixtures::elongated_contour(), cfg)) {
        ASSERT_TRUE(r.pma_ok);
        EXPECT_LT(r.pma_error, kPi / 2);
    }
}

TEST(Sweep, RejectsUnknownGenerator) {
    ExperimentConfig cfg;
    cfg.generator = "mt19937";
    EXPECT_THROW((void)rotation_sweep(fixtures::seven_landmarks(), cfg), Error);
}

TEST(GrowthMc, FirstOrderAndZeroSigma) {
    const auto rows = power_sum_growth_mc(20, 0.7, 3, 10000, 5);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0].k, 1);
    EXPECT_GE(rows[0].ratio, 0.9);
    EXPECT_LE(rows[0].ratio, 1.1);
    for (const auto& r : power_sum_growth_mc(5, 0.0, 3, 10, 1)) EXPECT_TRUE(std::isnan(r.ratio));
}

TEST(GrowthMc, DeterministicCsv) {
    std::ostringstream a;
    std::ostringstream b;
    write_growth_csv(a, power_sum_growth_mc(10, 1.0, 4, 500, 8));
    write_growth_csv(b, power_sum_growth_mc(10, 1.0, 4, 500, 8));
    EXPECT_EQ(a.str(), b.str());
    EXPECT_EQ(a.str().substr(0, 8), "k,ratio\n");
}
