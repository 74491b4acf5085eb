// Numerical shadow of the rank-2 Lazarsfeld-Mukai bundle E_{C,Z} attached to
// a smooth C in |H| and a gonality pencil |Z| (deg Z = d).
#ifndef K3PIC_LM_BUNDLE_HPP
#define K3PIC_LM_BUNDLE_HPP

#include "k3pic/lattice.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace k3pic {

struct InvalidMarkerError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct LmInvariants {
    Int rank = 2;
    DivClass c1 = DivClass::H();
    Int c2 = 0;
    Int chi = 0;
    Int h0 = 0;
    /// H^2 / 2 = g - 1.
    Int slope_threshold = 0;
};

LmInvariants lm_invariants(const PolarizedLattice& lat);

/// Which restriction O_C(Z) is: the lattice cannot see this, so callers supply it.
enum class PencilMarker { CutByF, CutByHMinusF, Other };

std::string to_string(PencilMarker m);

enum class StabilityTag { Stable, StrictlySemistable, Unstable };

std::string to_string(StabilityTag t);

struct StabilityVerdict {
    StabilityTag tag = StabilityTag::Stable;
    std::vector<DivClass> witnesses;
};

/// A line-bundle extension 0 -> sub -> E -> quotient -> 0 with sub + quotient = H.
struct DmCandidate {
    DivClass sub;
    DivClass quotient;
    Int pairing = 0;
    bool quotient_is_pencil = false;
};

/// Quotients drawn from the ACM-initialized classification with h^0 >= 2,
/// h^1 = 0, h^0(L - H) = 0 and L.(H - L) = c2 = d. For d < g - 1 these are
/// numerical candidates only.
std::vector<DmCandidate> dm_candidates(const PolarizedLattice& lat);

/// Throws InvalidMarkerError for CutByHMinusF unless d = g - 1.
StabilityVerdict stability_classify(const PolarizedLattice& lat, PencilMarker marker);

/// Brute-force search for sub-line-bundle classes M with M.H >= g - 1 whose
/// quotient H - M is base point free, nontrivial, h^0(H - M) >= 2, and
/// M.(H - M) <= d. Sorted by (n, m).
std::vector<DivClass> destabilizer_search(const PolarizedLattice& lat);

/// Elliptic pencil classes P with P.H = d.
std::vector<DivClass> gonality_pencil_classes(const PolarizedLattice& lat);

}  // namespace k3pic

#endif  // K3PIC_LM_BUNDLE_HPP
