// test_boundary_kernel.cpp — Response functions and image sums

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "gen.hpp"
#include "mirrorcoh/boundary_kernel.hpp"
#include "oracles.hpp"

using namespace mirrorcoh;
using std::numbers::pi;

TEST(ResponseFunctions, LimitsAtZero) {
    EXPECT_EQ(f_parallel(0.0), 1.0);
    EXPECT_EQ(f_perp(0.0), -1.0);
}

TEST(ResponseFunctions, DecayAtLargeDistance) {
    EXPECT_LT(std::abs(f_parallel(1e4)), 1e-3);
    EXPECT_LT(std::abs(f_perp(1e4)), 1e-7);
    EXPECT_NEAR(single_mirror_factor(1e5, PolarizationWeights::isotropic()), 1.0, 1e-4);
}

TEST(ResponseFunctions, QuarterPiValues) {
    // exact: (3 pi^2 - 12) / pi^3 and -24 / pi^3
    EXPECT_NEAR(f_parallel(pi / 4), (3 * pi * pi - 12) / (pi * pi * pi), 1e-14);
    EXPECT_NEAR(f_perp(pi / 4), -24 / (pi * pi * pi), 1e-14);
    EXPECT_NEAR(f_parallel(pi / 4), 0.567911, 1e-6);
    EXPECT_NEAR(f_perp(pi / 4), -0.774037, 1e-6);
}

TEST(ResponseFunctions, MatchQuadrature) {
    for (double z : {0.0, 0.01, 0.049, 0.05, 0.051, 0.3, 1.0, 2.5, 7.0, 20.0, 60.0}) {
        EXPECT_NEAR(f_parallel(z), oracle::quad_f_parallel(z), 1e-12) << z;
        EXPECT_NEAR(f_perp(z), oracle::quad_f_perp(z), 1e-12) << z;
    }
}

TEST(ResponseFunctions, ContinuousAcrossSeriesSwitch) {
    EXPECT_NEAR(f_parallel(std::nextafter(kSeriesSwitch, 0.0)), f_parallel(kSeriesSwitch), 1e-10);
    EXPECT_NEAR(f_perp(std::nextafter(kSeriesSwitch, 0.0)), f_perp(kSeriesSwitch), 1e-10);
    // series and closed form side by side around the switch
    for (double z = 0.04; z <= 0.06; z += 0.001) {
        EXPECT_NEAR(f_parallel(z), f_parallel_closed(z), 1e-10) << z;
        EXPECT_NEAR(f_perp(z), f_perp_closed(z), 1e-10) << z;
    }
}

TEST(ResponseFunctions, EvenAndBounded) {
    gen::Source src(3);
    for (int i = 0; i < 500; ++i) {
        const double z = src.uniform(0.0, 100.0);
        EXPECT_EQ(f_parallel(z), f_parallel(-z));
        EXPECT_EQ(f_perp(z), f_perp(-z));
        EXPECT_LE(std::abs(f_parallel(z)), 1.0);
        EXPECT_LE(std::abs(f_perp(z)), 1.0);
    }
}

TEST(SingleMirror, NearMirrorLimits) {
    const Geometry g = SingleMirror{1e-6};
    EXPECT_NEAR(geometric_factor(g, PolarizationWeights::parallel()).f_value, 0.0, 1e-10);
    EXPECT_NEAR(geometric_factor(g, PolarizationWeights::perpendicular()).f_value, 2.0, 1e-10);
    EXPECT_NEAR(geometric_factor(g, PolarizationWeights::isotropic()).f_value, 2.0 / 3.0, 1e-10);
    EXPECT_EQ(geometric_factor(FreeSpace{}, PolarizationWeights::isotropic()).f_value, 1.0);
}

TEST(ImageSums, HalfPiClosedSums) {
    const double d = pi / 2;
    gen::Source src(5);
    for (int i = 0; i < 10; ++i) {
        const auto pol = src.polarization();
        const double z = src.uniform(0.0, d);
        const auto r = image_sums(d, z, pol);
        EXPECT_TRUE(r.converged);
        EXPECT_LE(r.est_error, kDefaultSumTol);
        EXPECT_NEAR(r.g_sum, 0.75 * pol.in_plane() + 1.5 * pol.alpha_z, 1e-9);
        EXPECT_NEAR(r.h_sum, 0.75 * pol.in_plane() - 1.5 * pol.alpha_z, 1e-9);
        EXPECT_NEAR(r.difference(), 3 * pol.alpha_z, 1e-9);
    }
}

TEST(ImageSums, MatchModeSumOracle) {
    gen::Source src(7);
    for (double d : {0.05, 0.3, 1.0, 2.0, 3.0, 3.1, 3.14, pi, 4.0, 7.3, 2 * pi, 12.0, 50.0}) {
        for (int i = 0; i < 3; ++i) {
            const auto pol = src.polarization();
            const double z = src.uniform(0.0, d);
            const auto f = geometric_factor(DoubleMirror{d, z}, pol);
            EXPECT_NEAR(f.f_value, oracle::mode_sum_factor(d, z, pol), 1e-8) << "d=" << d << " z=" << z;
        }
    }
}

TEST(ImageSums, ThreeHalvesPiPerpendicularAtMirror) {
    const auto f = geometric_factor(DoubleMirror{1.5 * pi, 0.0}, PolarizationWeights::perpendicular());
    EXPECT_NEAR(f.f_value, 19.0 / 9.0, 1e-8);
}

TEST(ImageSums, MirrorSymmetry) {
    gen::Source src(9);
    for (double d : {1.5 * pi, 2.7, 9.0}) {
        for (int i = 0; i < 10; ++i) {
            const auto pol = src.polarization();
            const double z = src.uniform(0.0, d);
            const double a = geometric_factor(DoubleMirror{d, z}, pol).f_value;
            const double b = geometric_factor(DoubleMirror{d, d - z}, pol).f_value;
            EXPECT_NEAR(a, b, 1e-8);
        }
    }
}

TEST(ImageSums, ParallelCancelsAtMirror) {
    for (double d : {0.4, 1.0, 1.5 * pi, 5.0, 20.0}) {
        const auto pol = PolarizationWeights::make(0.3, 0.7, 0.0);
        EXPECT_NEAR(geometric_factor(DoubleMirror{d, 0.0}, pol).f_value, 0.0, 1e-9) << d;
    }
}

TEST(ImageSums, RejectsInvalidInput) {
    EXPECT_THROW(image_sums(-1.0, 0.0, PolarizationWeights::parallel()), std::invalid_argument);
    EXPECT_THROW(image_sums(1.0, 2.0, PolarizationWeights::parallel()), std::invalid_argument);
    EXPECT_THROW(image_sums(1.0, 0.5, PolarizationWeights::parallel(), 0.0), std::invalid_argument);
}

TEST(ImageSums, NonConvergenceIsReported) {
    const auto r = image_sums(2 * pi - 2e-4, 1.0, PolarizationWeights::isotropic(), 1e-10, 4096);
    EXPECT_FALSE(r.converged);
    EXPECT_GT(r.terms_used, 0u);
    EXPECT_THROW(geometric_factor(DoubleMirror{2 * pi - 2e-4, 1.0}, PolarizationWeights::isotropic(), 1e-14),
                 ImageSumError);
}
