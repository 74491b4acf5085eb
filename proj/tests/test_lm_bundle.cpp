#include "k3pic/lm_bundle.hpp"

#include "k3pic/cohomology.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace k3pic;

namespace {

const DivClass H = DivClass::H();
const DivClass F = DivClass::F();

std::vector<DivClass> quotients(const std::vector<DmCandidate>& cs) {
    std::vector<DivClass> out;
    for (const auto& c : cs) out.push_back(c.quotient);
    return out;
}

}  // namespace

TEST(LmInvariants, Examples) {
    EXPECT_EQ(lm_invariants(PolarizedLattice(4, 3)).h0, 4);
    EXPECT_EQ(lm_invariants(PolarizedLattice(3, 3)).h0, 3);
    LmInvariants inv = lm_invariants(PolarizedLattice(5, 4));
    EXPECT_EQ(inv.h0, 4);
    EXPECT_EQ(inv.slope_threshold, 4);
    EXPECT_EQ(inv.rank, 2);
    EXPECT_EQ(inv.c1, H);
    EXPECT_EQ(inv.c2, 4);
}

TEST(LmInvariants, ChiFormulas) {
    for (auto [g, d] : oracle::valid_lattices(40)) {
        PolarizedLattice lat(g, d);
        LmInvariants inv = lm_invariants(lat);
        EXPECT_EQ(inv.chi, g + 3 - d);
        EXPECT_EQ(inv.chi, lat.square(H) / 2 - inv.c2 + 4);
        EXPECT_EQ(inv.chi, (2 * g - 2) / 2 - d + 4);
        EXPECT_EQ(inv.h0, inv.chi);
        EXPECT_EQ(inv.slope_threshold, g - 1);
    }
}

TEST(DmCandidates, GenusFourHasBothPencils) {
    auto cs = dm_candidates(PolarizedLattice(4, 3));
    EXPECT_EQ(quotients(cs), (std::vector<DivClass>{F, H - F}));
    for (const auto& c : cs) {
        EXPECT_TRUE(c.quotient_is_pencil);
        EXPECT_EQ(c.pairing, 3);
        EXPECT_EQ(c.sub + c.quotient, H);
    }
}

TEST(DmCandidates, GenusThreeSubIsTheMinusTwoCurve) {
    auto cs = dm_candidates(PolarizedLattice(3, 3));
    ASSERT_EQ(cs.size(), 1u);
    EXPECT_EQ(cs[0].quotient, F);
    EXPECT_EQ(cs[0].sub, H - F);
    EXPECT_EQ(cs[0].pairing, 3);
    EXPECT_TRUE(cs[0].quotient_is_pencil);
}

TEST(DmCandidates, GenusSevenTrigonal) {
    // H - F has h0 = 5 and pairs to 3 with F, so it is a numerical candidate
    // too, but not an elliptic pencil.
    PolarizedLattice lat(7, 3);
    auto cs = dm_candidates(lat);
    ASSERT_EQ(quotients(cs), (std::vector<DivClass>{F, H - F}));
    EXPECT_TRUE(cs[0].quotient_is_pencil);
    EXPECT_FALSE(cs[1].quotient_is_pencil);
    EXPECT_EQ(h0(lat, H - F), 5);
}

TEST(DmCandidates, QuotientsSatisfyTheFilters) {
    for (auto [g, d] : oracle::valid_lattices(40)) {
        PolarizedLattice lat(g, d);
        for (const auto& c : dm_candidates(lat)) {
            EXPECT_TRUE(c.quotient == F || c.quotient == H - F);
            EXPECT_EQ(c.sub + c.quotient, H);
            EXPECT_EQ(c.pairing, d);
            EXPECT_EQ(lat.intersect(c.sub, c.quotient), d);
            EXPECT_FALSE(c.quotient.is_zero());
            EXPECT_TRUE(positivity(lat, c.quotient).base_point_free);
            EXPECT_EQ(h1(lat, c.quotient), 0);
            EXPECT_EQ(h0(lat, c.quotient - H), 0);
            EXPECT_GE(h0(lat, c.quotient), 2);
        }
    }
}

TEST(Stability, GenusThreeIsStable) {
    PolarizedLattice lat(3, 3);
    for (PencilMarker m : {PencilMarker::CutByF, PencilMarker::Other}) {
        StabilityVerdict v = stability_classify(lat, m);
        EXPECT_EQ(v.tag, StabilityTag::Stable);
        EXPECT_TRUE(v.witnesses.empty());
    }
    EXPECT_TRUE(destabilizer_search(lat).empty());
}

TEST(Stability, BorderlineCases) {
    for (auto [g, d] : {std::pair<Int, Int>{4, 3}, {5, 4}}) {
        PolarizedLattice lat(g, d);
        for (PencilMarker m : {PencilMarker::CutByF, PencilMarker::CutByHMinusF}) {
            StabilityVerdict v = stability_classify(lat, m);
            EXPECT_EQ(v.tag, StabilityTag::StrictlySemistable);
            EXPECT_EQ(v.witnesses, (std::vector<DivClass>{F, H - F}));
        }
        StabilityVerdict other = stability_classify(lat, PencilMarker::Other);
        EXPECT_EQ(other.tag, StabilityTag::Stable);
        EXPECT_TRUE(other.witnesses.empty());
    }
}

TEST(Stability, UnstableBelowTheBorderline) {
    PolarizedLattice lat(7, 4);
    StabilityVerdict v = stability_classify(lat, PencilMarker::CutByF);
    EXPECT_EQ(v.tag, StabilityTag::Unstable);
    ASSERT_EQ(v.witnesses, (std::vector<DivClass>{H - F}));
    EXPECT_EQ(lat.degree(v.witnesses[0]), 8);
    EXPECT_GT(lat.degree(v.witnesses[0]), lat.g() - 1);
    EXPECT_EQ(stability_classify(lat, PencilMarker::Other).tag, StabilityTag::Stable);
}

TEST(Stability, RejectsUnavailableMarker) {
    EXPECT_THROW(stability_classify(PolarizedLattice(7, 3), PencilMarker::CutByHMinusF), InvalidMarkerError);
    EXPECT_THROW(stability_classify(PolarizedLattice(3, 3), PencilMarker::CutByHMinusF), InvalidMarkerError);
    EXPECT_NO_THROW(stability_classify(PolarizedLattice(5, 4), PencilMarker::CutByHMinusF));
}

TEST(Stability, MarkerNames) {
    EXPECT_EQ(to_string(PencilMarker::CutByF), "f");
    EXPECT_EQ(to_string(PencilMarker::CutByHMinusF), "h-f");
    EXPECT_EQ(to_string(PencilMarker::Other), "other");
    EXPECT_EQ(to_string(StabilityTag::StrictlySemistable), "StrictlySemistable");
}

TEST(DestabilizerSearch, Examples) {
    EXPECT_TRUE(destabilizer_search(PolarizedLattice(3, 3)).empty());
    EXPECT_EQ(destabilizer_search(PolarizedLattice(5, 4)), (std::vector<DivClass>{F, H - F}));
    EXPECT_EQ(destabilizer_search(PolarizedLattice(7, 3)), (std::vector<DivClass>{H - F}));
}

TEST(DestabilizerSearch, AgreesWithTrichotomy) {
    for (auto [g, d] : oracle::valid_lattices(40)) {
        PolarizedLattice lat(g, d);
        StabilityVerdict v = stability_classify(lat, PencilMarker::CutByF);
        std::vector<DivClass> found = destabilizer_search(lat);
        EXPECT_EQ(v.witnesses, found) << g << "," << d;
        bool strict = std::any_of(found.begin(), found.end(), [&](DivClass m) { return lat.degree(m) > g - 1; });
        bool equal_only = !found.empty() && std::all_of(found.begin(), found.end(),
                                                        [&](DivClass m) { return lat.degree(m) == g - 1; });
        EXPECT_EQ(v.tag == StabilityTag::Unstable, strict);
        EXPECT_EQ(v.tag == StabilityTag::StrictlySemistable, equal_only);
        EXPECT_EQ(v.tag == StabilityTag::Stable, found.empty());
        for (DivClass m : v.witnesses) EXPECT_GE(lat.degree(m), g - 1);
    }
}

TEST(Gonality, Examples) {
    EXPECT_EQ(gonality_pencil_classes(PolarizedLattice(4, 3)), (std::vector<DivClass>{F, H - F}));
    EXPECT_EQ(gonality_pencil_classes(PolarizedLattice(7, 3)), (std::vector<DivClass>{F}));
    EXPECT_EQ(gonality_pencil_classes(PolarizedLattice(5, 4)), (std::vector<DivClass>{F, H - F}));
}

TEST(Gonality, CountsAcrossFamily) {
    std::vector<std::pair<Int, Int>> borderline;
    for (auto [g, d] : oracle::valid_lattices(40)) {
        PolarizedLattice lat(g, d);
        auto pencils = gonality_pencil_classes(lat);
        if (d == g - 1) {
            borderline.push_back({g, d});
            EXPECT_EQ(pencils.size(), 2u);
        } else if (d < g - 1) {
            EXPECT_EQ(pencils.size(), 1u) << g << "," << d;
        }
        for (DivClass p : pencils) EXPECT_EQ(lat.degree(p), d);
    }
    EXPECT_EQ(borderline, (std::vector<std::pair<Int, Int>>{{4, 3}, {5, 4}}));
}
