// Rank-2 Picard lattices ZH + ZF of polarized K3 surfaces with
// H^2 = 2g-2, H.F = d, F^2 = 0.
#ifndef K3PIC_LATTICE_HPP
#define K3PIC_LATTICE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace k3pic {

using Int = std::int64_t;

/// Upper bound on |g|, |d| and on user-supplied class coefficients.
inline constexpr Int kCoefficientCap = 1'000'000;

struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

struct InvalidLatticeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

namespace checked {
Int add(Int a, Int b);
Int sub(Int a, Int b);
Int mul(Int a, Int b);
}  // namespace checked

Int gcd(Int a, Int b);
Int lcm(Int a, Int b);
/// Floor division for b > 0.
Int floor_div(Int a, Int b);
/// Ceiling division for b > 0.
Int ceil_div(Int a, Int b);

/// The class nH + mF.
struct DivClass {
    Int n = 0;
    Int m = 0;

    constexpr DivClass() = default;
    constexpr DivClass(Int n_, Int m_) : n(n_), m(m_) {}

    static constexpr DivClass H() { return {1, 0}; }
    static constexpr DivClass F() { return {0, 1}; }
    static constexpr DivClass zero() { return {0, 0}; }

    bool is_zero() const { return n == 0 && m == 0; }
    /// gcd(|n|,|m|) == 1, with gcd(0,k) = |k|.
    bool is_primitive() const { return gcd(n, m) == 1; }
    /// Content gcd(|n|,|m|); zero for the zero class.
    Int content() const { return gcd(n, m); }

    friend auto operator<=>(const DivClass&, const DivClass&) = default;
};

DivClass operator+(DivClass a, DivClass b);
DivClass operator-(DivClass a, DivClass b);
DivClass operator-(DivClass a);
DivClass operator*(Int k, DivClass a);

std::string to_string(DivClass c);
std::ostream& operator<<(std::ostream& os, DivClass c);

/// Throws OverflowError when |n| or |m| exceeds kCoefficientCap.
void require_within_caps(DivClass c);

class PolarizedLattice {
public:
    /// Throws InvalidLatticeError unless g >= 3 and 3 <= d <= floor((g+3)/2).
    PolarizedLattice(Int g, Int d);

    static bool is_valid(Int g, Int d);
    static Int max_d(Int g) { return (g + 3) / 2; }

    Int g() const { return g_; }
    Int d() const { return d_; }
    Int h_square() const { return 2 * g_ - 2; }

    /// Row-major Gram matrix in the basis (H, F).
    std::array<std::array<Int, 2>, 2> gram() const;

    Int intersect(DivClass a, DivClass b) const;
    Int square(DivClass a) const { return intersect(a, a); }
    Int degree(DivClass a) const { return intersect(a, DivClass::H()); }

    bool d_divides_g() const { return g_ % d_ == 0; }

    friend bool operator==(const PolarizedLattice&, const PolarizedLattice&) = default;

private:
    Int g_;
    Int d_;
};

struct ConeData {
    std::optional<DivClass> minus_two_class;
    std::vector<DivClass> isotropic_primitives;
    std::array<DivClass, 2> eff_rays;
    std::array<DivClass, 2> nef_rays;
};

/// +-Gamma with Gamma = H - (g/d)F, positive H-degree first; empty unless d | g.
std::optional<std::pair<DivClass, DivClass>> minus_two_classes(const PolarizedLattice& lat);

/// The positive (-2)-class, if any.
std::optional<DivClass> positive_minus_two_class(const PolarizedLattice& lat);

/// Primitive isotropic class other than F: (d/e)H - ((g-1)/e)F, e = gcd(g-1, d).
/// Effective for every lattice in the family; nef only when d does not divide g.
DivClass second_isotropic_class(const PolarizedLattice& lat);

/// Primitive nef isotropic classes with positive H-degree: [F] if d | g, else [F, R].
std::vector<DivClass> elliptic_pencil_classes(const PolarizedLattice& lat);

ConeData cone_data(const PolarizedLattice& lat);

/// x.P >= 0 for both effective rays P.
bool is_nef(const PolarizedLattice& lat, DivClass x);
/// x in the cone spanned by the effective rays, i.e. x.N >= 0 for both nef rays N.
bool in_effective_cone(const PolarizedLattice& lat, DivClass x);

/// All lattice points L with both L and total - L in the effective cone,
/// sorted by (n, m). Finite because the nef rays are independent.
std::vector<DivClass> effective_splittings(const PolarizedLattice& lat, DivClass total);

}  // namespace k3pic

#endif  // K3PIC_LATTICE_HPP
