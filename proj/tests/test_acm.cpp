#include "k3pic/acm.hpp"

#include "k3pic/cohomology.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace k3pic;

namespace {

const DivClass H = DivClass::H();
const DivClass F = DivClass::F();

}  // namespace

TEST(IsAcm, EllipticPencilFIsAcmAndInitialized) {
    for (auto [g, d] : oracle::valid_lattices(30)) {
        AcmVerdict v = is_acm(PolarizedLattice(g, d), F);
        EXPECT_TRUE(v.acm) << g << "," << d;
        EXPECT_TRUE(v.initialized);
        EXPECT_TRUE(v.failures.empty());
        EXPECT_LE(v.window_lo, v.window_hi);
    }
}

TEST(IsAcm, HMinusFIsAcm) {
    for (auto [g, d] : oracle::valid_lattices(30)) {
        if (d > g - 1) continue;
        AcmVerdict v = is_acm(PolarizedLattice(g, d), H - F);
        EXPECT_TRUE(v.acm) << g << "," << d;
        EXPECT_TRUE(v.initialized);
    }
}

TEST(IsAcm, TwiceFFails) {
    AcmVerdict v = is_acm(PolarizedLattice(5, 4), 2 * F);
    EXPECT_FALSE(v.acm);
    EXPECT_NE(std::find(v.failures.begin(), v.failures.end(), AcmFailure{0, 1}), v.failures.end());
    // 2F - H = -(H - 2F) has square -8 and no sections on either side.
    EXPECT_NE(std::find(v.failures.begin(), v.failures.end(), AcmFailure{-1, 2}), v.failures.end());
}

TEST(IsAcm, MinusTwoCurveWithLargeQuotientIsNotAcm) {
    // (6,3): Gamma - H = -2F has h1 = 1.
    AcmVerdict v = is_acm(PolarizedLattice(6, 3), H - 2 * F);
    EXPECT_FALSE(v.acm);
    EXPECT_TRUE(v.initialized);
    ASSERT_FALSE(v.failures.empty());
    EXPECT_EQ(v.failures[0], (AcmFailure{-1, 1}));
}

TEST(IsAcm, OutsideWindowEveryTwistIsAmpleOrAntiAmple) {
    for (auto [g, d] : oracle::valid_lattices(12)) {
        PolarizedLattice lat(g, d);
        ConeData cd = cone_data(lat);
        for (Int n = -6; n <= 6; ++n)
            for (Int m = -6; m <= 6; ++m) {
                DivClass l{n, m};
                AcmVerdict v = is_acm(lat, l);
                DivClass above = l + (v.window_hi + 1) * H;
                DivClass below = l + (v.window_lo - 1) * H;
                for (DivClass ray : cd.eff_rays) {
                    ASSERT_GE(lat.intersect(above, ray), 1);
                    ASSERT_LE(lat.intersect(below, ray), -1);
                }
                ASSERT_GT(lat.square(above), 0);
            }
    }
}

TEST(IsAcm, AgreesWithWideTwistScan) {
    for (auto [g, d] : oracle::valid_lattices(12)) {
        PolarizedLattice lat(g, d);
        for (Int n = -8; n <= 8; ++n)
            for (Int m = -8; m <= 8; ++m) {
                DivClass l{n, m};
                ASSERT_EQ(is_acm(lat, l).acm, oracle::acm_by_twists(lat, l, 40)) << g << "," << d << " " << l;
                ASSERT_EQ(is_initialized(lat, l), oracle::initialized(lat, l));
            }
    }
}

TEST(IsAcm, FailureSetShiftsWithTwist) {
    for (auto [g, d] : oracle::valid_lattices(12)) {
        PolarizedLattice lat(g, d);
        for (DivClass l : {F, 2 * F, 3 * F, H - 2 * F, DivClass{2, -5}, DivClass{-1, 3}}) {
            auto base = is_acm(lat, l).failures;
            for (Int k = -5; k <= 5; ++k) {
                auto twisted = is_acm(lat, l + k * H).failures;
                ASSERT_EQ(twisted.size(), base.size());
                for (std::size_t i = 0; i < base.size(); ++i) {
                    EXPECT_EQ(twisted[i].twist, base[i].twist - k);
                    EXPECT_EQ(twisted[i].h1, base[i].h1);
                }
            }
        }
    }
}

TEST(IsAcm, SerreDualityInsideWindow) {
    for (auto [g, d] : oracle::valid_lattices(12)) {
        PolarizedLattice lat(g, d);
        for (Int n = -5; n <= 5; ++n)
            for (Int m = -5; m <= 5; ++m) {
                DivClass l{n, m};
                AcmVerdict v = is_acm(lat, l);
                for (Int t = v.window_lo; t <= v.window_hi; ++t) {
                    DivClass x = l + t * H;
                    ASSERT_EQ(h1(lat, x), h1(lat, -x));
                }
            }
    }
}

TEST(Classify, GenusFiveTrigonal) {
    EXPECT_EQ(classify_acm_initialized(PolarizedLattice(5, 3), 20), (std::vector<DivClass>{F, H - F}));
}

TEST(Classify, GenusThreeKeepsTheMinusTwoCurve) {
    // H - F is the (-2)-curve here: h0 = 1 > 0 and h0(-F) = 0, so it is initialized.
    PolarizedLattice lat(3, 3);
    EXPECT_EQ(classify_acm_initialized(lat, 20), (std::vector<DivClass>{F, H - F}));
    EXPECT_EQ(h0(lat, H - F), 1);
}

TEST(Classify, GenusTenPentagonal) {
    EXPECT_EQ(classify_acm_initialized(PolarizedLattice(10, 5), 20), (std::vector<DivClass>{F, H - F}));
}

TEST(Classify, SubsetOfFAndHMinusFAcrossFamily) {
    for (auto [g, d] : oracle::valid_lattices(14)) {
        PolarizedLattice lat(g, d);
        auto found = classify_acm_initialized(lat, 12);
        std::vector<DivClass> expected;
        for (DivClass c : {F, H - F})
            if (h0(lat, c) > 0) expected.push_back(c);
        EXPECT_EQ(found, expected) << g << "," << d;
    }
}

TEST(Classify, RejectsTinyRadius) {
    EXPECT_THROW(classify_acm_initialized(PolarizedLattice(5, 3), 1), std::invalid_argument);
}

TEST(Quartic, PredicateCases) {
    EXPECT_TRUE(quartic_acm_predicate(-2, 2, false, false));
    EXPECT_TRUE(quartic_acm_predicate(-2, 2, true, true));
    EXPECT_FALSE(quartic_acm_predicate(-2, 4, false, false));
    EXPECT_FALSE(quartic_acm_predicate(0, 5, false, false));
    EXPECT_TRUE(quartic_acm_predicate(0, 3, false, false));
    EXPECT_TRUE(quartic_acm_predicate(0, 4, true, false));
    EXPECT_TRUE(quartic_acm_predicate(2, 5, false, false));
    EXPECT_FALSE(quartic_acm_predicate(2, 4, false, false));
    EXPECT_TRUE(quartic_acm_predicate(4, 6, false, false));
    EXPECT_FALSE(quartic_acm_predicate(4, 6, true, false));
    EXPECT_FALSE(quartic_acm_predicate(4, 6, false, true));
    EXPECT_FALSE(quartic_acm_predicate(6, 7, false, false));
}

TEST(Quartic, SplittingTypes) {
    using P = std::pair<Int, Int>;
    EXPECT_EQ(quartic_splitting_candidates(), (std::vector<P>{{1, -2}, {2, -2}, {3, 0}, {4, 0}, {5, 2}}));
    auto types = quartic_splitting_types();
    EXPECT_EQ(types, (std::vector<P>{{5, 2}, {3, 0}, {4, 0}}));
    EXPECT_EQ(std::count(types.begin(), types.end(), P{1, -2}), 0);
    EXPECT_EQ(std::count(types.begin(), types.end(), P{2, -2}), 0);
}

TEST(Quartic, PredicateMatchesLatticeOnGenusThree) {
    PolarizedLattice lat(3, 3);
    int effective = 0;
    for (Int n = -10; n <= 10; ++n)
        for (Int m = -10; m <= 10; ++m) {
            DivClass dcl{n, m};
            if (dcl.is_zero() || h0(lat, dcl) == 0) continue;
            ++effective;
            bool predicted = quartic_acm_predicate(lat.square(dcl), lat.degree(dcl), h0(lat, dcl - H) > 0,
                                                   h0(lat, 2 * H - dcl) > 0);
            AcmVerdict v = is_acm(lat, dcl);
            EXPECT_EQ(predicted, v.acm && v.initialized) << dcl;
        }
    EXPECT_GT(effective, 50);
}
