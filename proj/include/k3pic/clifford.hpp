// Clifford index of the polarization via the set A(H) of classes L with
// h^0(L) >= 2 and h^0(H - L) >= 2.
#ifndef K3PIC_CLIFFORD_HPP
#define K3PIC_CLIFFORD_HPP

#include "k3pic/lattice.hpp"

#include <optional>
#include <vector>

namespace k3pic {

struct CliffordReport {
    /// min of L.(H-L) - 2 over A(H); empty iff A(H) is empty.
    std::optional<Int> mu;
    Int cliff = 0;
    /// Minimizers of L.(H-L), sorted by (n, m).
    std::vector<DivClass> a0_classes;
    /// floor((g-1)/2)
    Int generic_bound = 0;
};

/// Every class of A(H), sorted by (n, m). The search region is the
/// parallelogram {L effective, H - L effective} cut out by the nef rays,
/// which contains A(H).
std::vector<DivClass> enumerate_A(const PolarizedLattice& lat);

CliffordReport clifford_index(const PolarizedLattice& lat);

/// Every L in A^0(H) has h^1(L) = 0 and is base point free.
/// Precondition: A(H) nonempty; returns true vacuously otherwise.
bool check_a0_properties(const PolarizedLattice& lat);

}  // namespace k3pic

#endif  // K3PIC_CLIFFORD_HPP
