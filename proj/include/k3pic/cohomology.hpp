// Line bundle cohomology and positivity on the rank-2 K3 lattices.
#ifndef K3PIC_COHOMOLOGY_HPP
#define K3PIC_COHOMOLOGY_HPP

#include "k3pic/lattice.hpp"

#include <string>

namespace k3pic {

struct CohomologyVector {
    Int h0 = 0;
    Int h1 = 0;
    Int h2 = 0;
    Int chi = 0;

    friend bool operator==(const CohomologyVector&, const CohomologyVector&) = default;
};

/// chi(D) = D^2/2 + 2.
Int euler_characteristic(const PolarizedLattice& lat, DivClass d);

/// h^0(D). Strips the (-2)-curve while it pairs negatively with D, then reads
/// h^0 off the nef residue: D^2/2 + 2 when big, k + 1 when D = kP isotropic.
Int h0(const PolarizedLattice& lat, DivClass d);

/// h^2 by Serre duality, h^1 from Riemann-Roch. Throws InvariantError if h^1 < 0.
CohomologyVector cohomology(const PolarizedLattice& lat, DivClass d);

inline Int h1(const PolarizedLattice& lat, DivClass d) { return cohomology(lat, d).h1; }

enum class PencilKind { NotAPencil, EllipticPencilMultiple, HyperellipticException };

std::string to_string(PencilKind k);

struct PositivityReport {
    bool effective = false;
    bool nef = false;
    bool base_point_free = false;
    bool very_ample = false;
    PencilKind pencil_kind = PencilKind::NotAPencil;
    /// Multiplicity k when pencil_kind is EllipticPencilMultiple, otherwise 0.
    Int pencil_multiple = 0;
};

/// Decomposition D = kP + Gamma' with k >= 2, P a primitive nef isotropic class
/// and Gamma' an effective (-2)-class with P.Gamma' = 1, if one exists.
bool has_hyperelliptic_decomposition(const PolarizedLattice& lat, DivClass d);

PositivityReport positivity(const PolarizedLattice& lat, DivClass d);

}  // namespace k3pic

#endif  // K3PIC_COHOMOLOGY_HPP
