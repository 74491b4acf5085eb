#include "k3pic/cohomology.hpp"

namespace k3pic {

namespace {

// D = k * P with k >= 1 for a primitive P; returns k or 0.
Int multiple_of(DivClass d, DivClass p) {
    Int k = d.content();
    if (k == 0) return 0;
    DivClass unit{d.n / k, d.m / k};
    return unit == p ? k : 0;
}

}  // namespace

Int euler_characteristic(const PolarizedLattice& lat, DivClass d) {
    return lat.square(d) / 2 + 2;
}

Int h0(const PolarizedLattice& lat, DivClass d) {
    if (d.is_zero()) return 1;
    Int deg = lat.degree(d);
    if (deg <= 0) return 0;

    if (auto gamma = positive_minus_two_class(lat)) {
        Int pairing = lat.intersect(d, *gamma);
        if (pairing < 0) {
            // Gamma is a fixed component while D.Gamma < 0; each removal raises D.Gamma by 2
            // and lowers D.H by Gamma.H = g - 2.
            Int steps = ceil_div(-pairing, 2);
            if (steps > deg / (lat.g() - 2)) return 0;
            d = d - steps * *gamma;
            if (d.is_zero()) return 1;
            if (lat.degree(d) <= 0) return 0;
        }
    }

    if (!is_nef(lat, d)) return 0;

    Int sq = lat.square(d);
    if (sq > 0) return sq / 2 + 2;
    if (sq == 0) return d.content() + 1;
    throw InvariantError("nef class with negative square: " + to_string(d));
}

CohomologyVector cohomology(const PolarizedLattice& lat, DivClass d) {
    CohomologyVector v;
    v.h0 = h0(lat, d);
    v.h2 = h0(lat, -d);
    v.chi = euler_characteristic(lat, d);
    v.h1 = v.h0 + v.h2 - v.chi;
    if (v.h1 < 0)
        throw InvariantError("negative h1 for class " + to_string(d) + " on (g,d)=(" +
                             std::to_string(lat.g()) + "," + std::to_string(lat.d()) + ")");
    return v;
}

std::string to_string(PencilKind k) {
    switch (k) {
        case PencilKind::NotAPencil: return "NotAPencil";
        case PencilKind::EllipticPencilMultiple: return "EllipticPencilMultiple";
        case PencilKind::HyperellipticException: return "HyperellipticException";
    }
    return "?";
}

bool has_hyperelliptic_decomposition(const PolarizedLattice& lat, DivClass d) {
    // The only effective (-2)-class is the positive one.
    auto gamma = positive_minus_two_class(lat);
    if (!gamma) return false;
    for (DivClass p : elliptic_pencil_classes(lat)) {
        if (lat.intersect(p, *gamma) != 1) continue;
        if (multiple_of(d - *gamma, p) >= 2) return true;
    }
    return false;
}

PositivityReport positivity(const PolarizedLattice& lat, DivClass d) {
    PositivityReport r;
    r.effective = h0(lat, d) > 0;
    r.nef = is_nef(lat, d);

    if (!r.effective) {
        r.base_point_free = false;
    } else if (d.is_zero()) {
        r.base_point_free = true;
    } else {
        r.base_point_free = r.nef && !has_hyperelliptic_decomposition(lat, d);
    }

    if (r.effective && r.nef && lat.square(d) >= 4) {
        bool ok = true;
        for (DivClass p : elliptic_pencil_classes(lat))
            if (lat.intersect(p, d) <= 2) ok = false;
        if (d.n % 2 == 0 && d.m % 2 == 0) {
            DivClass half{d.n / 2, d.m / 2};
            if (lat.square(half) == 2) ok = false;
        }
        if (auto gamma = positive_minus_two_class(lat))
            if (lat.intersect(*gamma, d) == 0) ok = false;
        r.very_ample = ok;
    }

    for (DivClass p : elliptic_pencil_classes(lat)) {
        if (Int k = multiple_of(d, p); k >= 1) {
            r.pencil_kind = PencilKind::EllipticPencilMultiple;
            r.pencil_multiple = k;
            return r;
        }
    }
    if (r.nef && has_hyperelliptic_decomposition(lat, d))
        r.pencil_kind = PencilKind::HyperellipticException;
    return r;
}

}  // namespace k3pic
