#include "k3pic/acm.hpp"

#include "k3pic/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3pic {

Int ample_twist_threshold(const PolarizedLattice& lat, DivClass l) {
    const ConeData cd = cone_data(lat);
    Int threshold = 0;
    bool first = true;
    for (DivClass ray : cd.eff_rays) {
        Int step = lat.intersect(DivClass::H(), ray);  // > 0, H is ample
        Int need = ceil_div(checked::sub(1, lat.intersect(l, ray)), step);
        threshold = first ? need : std::max(threshold, need);
        first = false;
    }
    return threshold;
}

bool is_initialized(const PolarizedLattice& lat, DivClass l) {
    return h0(lat, l) > 0 && h0(lat, l - DivClass::H()) == 0;
}

AcmVerdict is_acm(const PolarizedLattice& lat, DivClass l) {
    AcmVerdict v;
    v.window_hi = ample_twist_threshold(lat, l);
    v.window_lo = -ample_twist_threshold(lat, -l);
    for (Int t = v.window_lo; t <= v.window_hi; ++t) {
        Int value = h1(lat, l + t * DivClass::H());
        if (value != 0) v.failures.push_back({t, value});
    }
    v.acm = v.failures.empty();
    v.initialized = is_initialized(lat, l);
    return v;
}

std::vector<DivClass> classify_acm_initialized(const PolarizedLattice& lat, Int radius) {
    if (radius < 2) throw std::invalid_argument("classification radius must be >= 2");
    std::vector<DivClass> out;
    // Initialized classes are effective, so L.F = nd >= 0.
    for (Int n = 0; n <= radius; ++n) {
        for (Int m = -radius; m <= radius; ++m) {
            DivClass l{n, m};
            if (l.is_zero() || !is_initialized(lat, l)) continue;
            if (is_acm(lat, l).acm) out.push_back(l);
        }
    }
    return out;
}

bool quartic_acm_predicate(Int d_square, Int c_dot_d, bool has_d_minus_c, bool has_2c_minus_d) {
    switch (d_square) {
        case -2: return 1 <= c_dot_d && c_dot_d <= 3;
        case 0: return 3 <= c_dot_d && c_dot_d <= 4;
        case 2: return c_dot_d == 5;
        case 4: return c_dot_d == 6 && !has_d_minus_c && !has_2c_minus_d;
        default: return false;
    }
}

std::vector<std::pair<Int, Int>> quartic_splitting_candidates() {
    // Every (C.D, D^2) admitted by the quartic criterion has D^2 in {-2,0,2,4}
    // and C.D <= 6; enumerate that range through the predicate itself.
    std::vector<std::pair<Int, Int>> acm_pairs;
    for (Int sq = -2; sq <= 4; sq += 2)
        for (Int deg = 1; deg <= 6; ++deg)
            if (quartic_acm_predicate(sq, deg, false, false)) acm_pairs.push_back({deg, sq});

    // Trigonal hyperplane section: deg Z in {3, 4}, and c2 = L.(H-L) = L.H - L^2 = deg Z.
    std::vector<std::pair<Int, Int>> out;
    for (auto [deg, sq] : acm_pairs) {
        Int c2 = deg - sq;
        if (c2 == 3 || c2 == 4) out.push_back({deg, sq});
    }
    return out;
}

std::vector<std::pair<Int, Int>> quartic_splitting_types() {
    std::vector<std::pair<Int, Int>> out;
    for (auto [deg, sq] : quartic_splitting_candidates()) {
        // L.H <= 2 on a very ample H leaves |L| without moving part, so h^0(L) = 1.
        if (deg <= 2) continue;
        out.push_back({deg, sq});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    return out;
}

}  // namespace k3pic
