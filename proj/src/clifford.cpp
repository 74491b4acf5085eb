#include "k3pic/clifford.hpp"

#include "k3pic/cohomology.hpp"

#include <algorithm>

namespace k3pic {

std::vector<DivClass> enumerate_A(const PolarizedLattice& lat) {
    const DivClass h = DivClass::H();
    std::vector<DivClass> out;
    for (DivClass l : effective_splittings(lat, h)) {
        if (h0(lat, l) >= 2 && h0(lat, h - l) >= 2) out.push_back(l);
    }
    return out;
}

CliffordReport clifford_index(const PolarizedLattice& lat) {
    const DivClass h = DivClass::H();
    CliffordReport rep;
    rep.generic_bound = (lat.g() - 1) / 2;

    std::vector<DivClass> a = enumerate_A(lat);
    for (DivClass l : a) {
        Int value = lat.intersect(l, h - l) - 2;
        if (!rep.mu || value < *rep.mu) {
            rep.mu = value;
            rep.a0_classes.clear();
        }
        if (value == *rep.mu) rep.a0_classes.push_back(l);
    }
    std::sort(rep.a0_classes.begin(), rep.a0_classes.end());
    rep.cliff = rep.mu ? std::min(*rep.mu, rep.generic_bound) : rep.generic_bound;
    return rep;
}

bool check_a0_properties(const PolarizedLattice& lat) {
    for (DivClass l : clifford_index(lat).a0_classes) {
        // H is ample here, so a base divisor with H.Delta = 0 is empty.
        if (h1(lat, l) != 0) return false;
        if (!positivity(lat, l).base_point_free) return false;
    }
    return true;
}

}  // namespace k3pic
