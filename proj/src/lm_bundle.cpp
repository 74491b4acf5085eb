#include "k3pic/lm_bundle.hpp"

#include "k3pic/acm.hpp"
#include "k3pic/cohomology.hpp"

#include <algorithm>

namespace k3pic {

LmInvariants lm_invariants(const PolarizedLattice& lat) {
    LmInvariants inv;
    inv.c2 = lat.d();
    // chi(E) = c1^2/2 - c2 + 2 rank, and h^1(E) = h^2(E) = 0.
    inv.chi = lat.h_square() / 2 - inv.c2 + 4;
    inv.h0 = inv.chi;
    inv.slope_threshold = lat.h_square() / 2;
    return inv;
}

std::string to_string(PencilMarker m) {
    switch (m) {
        case PencilMarker::CutByF: return "f";
        case PencilMarker::CutByHMinusF: return "h-f";
        case PencilMarker::Other: return "other";
    }
    return "?";
}

std::string to_string(StabilityTag t) {
    switch (t) {
        case StabilityTag::Stable: return "Stable";
        case StabilityTag::StrictlySemistable: return "StrictlySemistable";
        case StabilityTag::Unstable: return "Unstable";
    }
    return "?";
}

std::vector<DmCandidate> dm_candidates(const PolarizedLattice& lat) {
    const DivClass h = DivClass::H();
    const std::vector<DivClass> pencils = elliptic_pencil_classes(lat);
    std::vector<DmCandidate> out;
    for (DivClass l : classify_acm_initialized(lat)) {
        CohomologyVector c = cohomology(lat, l);
        if (c.h0 < 2 || c.h1 != 0 || h0(lat, l - h) != 0) continue;
        Int pairing = lat.intersect(l, h - l);
        if (pairing != lat.d()) continue;
        DmCandidate cand;
        cand.sub = h - l;
        cand.quotient = l;
        cand.pairing = pairing;
        cand.quotient_is_pencil = std::find(pencils.begin(), pencils.end(), l) != pencils.end();
        out.push_back(cand);
    }
    return out;
}

StabilityVerdict stability_classify(const PolarizedLattice& lat, PencilMarker marker) {
    const Int g = lat.g();
    const Int d = lat.d();
    const DivClass f = DivClass::F();
    const DivClass h_minus_f = DivClass::H() - f;

    if (marker == PencilMarker::CutByHMinusF && d != g - 1)
        throw InvalidMarkerError("marker h-f requires H-F to be a gonality pencil (d = g-1)");

    StabilityVerdict v;
    if (d == g) {
        v.tag = StabilityTag::Stable;
    } else if (d == g - 1) {
        if (marker == PencilMarker::Other) {
            v.tag = StabilityTag::Stable;
        } else {
            v.tag = StabilityTag::StrictlySemistable;
            v.witnesses = {f, h_minus_f};
        }
    } else {
        // (H - F).H = 2g - 2 - d > g - 1 destabilizes when Z is cut by F.
        if (marker == PencilMarker::CutByF) {
            v.tag = StabilityTag::Unstable;
            v.witnesses = {h_minus_f};
        } else {
            v.tag = StabilityTag::Stable;
        }
    }
    return v;
}

std::vector<DivClass> destabilizer_search(const PolarizedLattice& lat) {
    const DivClass h = DivClass::H();
    std::vector<DivClass> out;
    for (DivClass m : effective_splittings(lat, h)) {
        if (h0(lat, m) < 1) continue;
        if (lat.degree(m) < lat.g() - 1) continue;
        DivClass q = h - m;
        if (q.is_zero() || h0(lat, q) < 2) continue;
        if (!positivity(lat, q).base_point_free) continue;
        if (lat.intersect(m, q) > lat.d()) continue;
        out.push_back(m);
    }
    return out;
}

std::vector<DivClass> gonality_pencil_classes(const PolarizedLattice& lat) {
    std::vector<DivClass> out;
    for (DivClass p : elliptic_pencil_classes(lat))
        if (lat.degree(p) == lat.d()) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace k3pic
