// ACM and initialized line bundles with respect to the polarization H.
#ifndef K3PIC_ACM_HPP
#define K3PIC_ACM_HPP

#include "k3pic/lattice.hpp"

#include <utility>
#include <vector>

namespace k3pic {

struct AcmFailure {
    Int twist = 0;
    Int h1 = 0;
    friend bool operator==(const AcmFailure&, const AcmFailure&) = default;
};

struct AcmVerdict {
    bool acm = false;
    bool initialized = false;
    /// Twists l outside [window_lo, window_hi] have h^1(L + lH) = 0 a priori.
    Int window_lo = 0;
    Int window_hi = 0;
    std::vector<AcmFailure> failures;
};

/// Smallest l such that L + lH pairs to >= 1 with both effective rays,
/// which puts it in the interior of the nef cone.
Int ample_twist_threshold(const PolarizedLattice& lat, DivClass l);

AcmVerdict is_acm(const PolarizedLattice& lat, DivClass l);

/// h^0(L) > 0 and h^0(L - H) = 0.
bool is_initialized(const PolarizedLattice& lat, DivClass l);

inline constexpr Int kDefaultAcmRadius = 20;

/// Nontrivial ACM and initialized classes in the box |n|,|m| <= radius, sorted by
/// (n, m). Throws std::invalid_argument for radius < 2.
std::vector<DivClass> classify_acm_initialized(const PolarizedLattice& lat,
                                               Int radius = kDefaultAcmRadius);

/// Numerical ACM+initialized criterion for a nonzero effective divisor D on a
/// smooth quartic with hyperplane class C.
bool quartic_acm_predicate(Int d_square, Int c_dot_d, bool has_d_minus_c, bool has_2c_minus_d);

/// ACM-initialized (L.H, L^2) pairs compatible with c2 = L.(H-L) in {3, 4},
/// in increasing (L^2, L.H) order.
std::vector<std::pair<Int, Int>> quartic_splitting_candidates();

/// Possible (L.H, L^2) of the quotient in a line-bundle extension of a rank-2
/// Lazarsfeld-Mukai bundle on a smooth quartic.
std::vector<std::pair<Int, Int>> quartic_splitting_types();

}  // namespace k3pic

#endif  // K3PIC_ACM_HPP
