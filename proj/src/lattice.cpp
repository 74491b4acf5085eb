#include "k3pic/lattice.hpp"

#include <limits>
#include <numeric>
#include <sstream>

namespace k3pic {

namespace checked {

Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

}  // namespace checked

Int gcd(Int a, Int b) {
    if (a == std::numeric_limits<Int>::min() || b == std::numeric_limits<Int>::min())
        throw OverflowError("gcd of INT64_MIN");
    return std::gcd(a, b);
}

Int lcm(Int a, Int b) {
    if (a == 0 || b == 0) return 0;
    Int g = gcd(a, b);
    return checked::mul(a < 0 ? -a : a, (b < 0 ? -b : b) / g);
}

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && (a < 0)) --q;
    return q;
}

Int ceil_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && (a > 0)) ++q;
    return q;
}

DivClass operator+(DivClass a, DivClass b) {
    return {checked::add(a.n, b.n), checked::add(a.m, b.m)};
}

DivClass operator-(DivClass a, DivClass b) {
    return {checked::sub(a.n, b.n), checked::sub(a.m, b.m)};
}

DivClass operator-(DivClass a) { return DivClass{} - a; }

DivClass operator*(Int k, DivClass a) {
    return {checked::mul(k, a.n), checked::mul(k, a.m)};
}

std::string to_string(DivClass c) {
    std::ostringstream os;
    os << c.n << ',' << c.m;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, DivClass c) {
    return os << '(' << c.n << ',' << c.m << ')';
}

void require_within_caps(DivClass c) {
    auto too_big = [](Int v) { return v > kCoefficientCap || v < -kCoefficientCap; };
    if (too_big(c.n) || too_big(c.m))
        throw OverflowError("class coefficient exceeds cap 1000000: " + to_string(c));
}

PolarizedLattice::PolarizedLattice(Int g, Int d) : g_(g), d_(d) {
    if (g < 3 || g > kCoefficientCap)
        throw InvalidLatticeError("invalid lattice: requires 3 <= g <= 1000000, got g=" +
                                  std::to_string(g));
    if (d < 3 || d > max_d(g))
        throw InvalidLatticeError("invalid lattice: requires 3 ≤ d ≤ ⌊(g+3)/2⌋, got g=" +
                                  std::to_string(g) + ", d=" + std::to_string(d));
}

bool PolarizedLattice::is_valid(Int g, Int d) {
    return g >= 3 && g <= kCoefficientCap && d >= 3 && d <= max_d(g);
}

std::array<std::array<Int, 2>, 2> PolarizedLattice::gram() const {
    return {{{h_square(), d_}, {d_, 0}}};
}

Int PolarizedLattice::intersect(DivClass a, DivClass b) const {
    // a.n b.n (2g-2) + (a.n b.m + a.m b.n) d, evaluated in 128 bits
    __extension__ using Wide = __int128;
    Wide r = Wide(a.n) * Wide(b.n) * Wide(h_square()) +
             (Wide(a.n) * Wide(b.m) + Wide(a.m) * Wide(b.n)) * Wide(d_);
    if (r > Wide(std::numeric_limits<Int>::max()) || r < Wide(std::numeric_limits<Int>::min()))
        throw OverflowError("intersection number overflows 64 bits");
    return static_cast<Int>(r);
}

std::optional<std::pair<DivClass, DivClass>> minus_two_classes(const PolarizedLattice& lat) {
    // x^2 = 2n(n(g-1) + md) = -2 forces n = +-1 and then m = -(g/d) n.
    if (!lat.d_divides_g()) return std::nullopt;
    DivClass gamma{1, -(lat.g() / lat.d())};
    return std::make_pair(gamma, -gamma);
}

std::optional<DivClass> positive_minus_two_class(const PolarizedLattice& lat) {
    if (auto pair = minus_two_classes(lat)) return pair->first;
    return std::nullopt;
}

DivClass second_isotropic_class(const PolarizedLattice& lat) {
    Int e = gcd(lat.g() - 1, lat.d());
    return {lat.d() / e, -((lat.g() - 1) / e)};
}

std::vector<DivClass> elliptic_pencil_classes(const PolarizedLattice& lat) {
    if (lat.d_divides_g()) return {DivClass::F()};
    return {DivClass::F(), second_isotropic_class(lat)};
}

ConeData cone_data(const PolarizedLattice& lat) {
    ConeData cd;
    cd.minus_two_class = positive_minus_two_class(lat);
    cd.isotropic_primitives = {DivClass::F(), second_isotropic_class(lat)};
    if (cd.minus_two_class) {
        // Nef ray on the H side: primitive generator of Gamma-perp, x.Gamma = n(g-2) + md = 0.
        Int e = gcd(lat.d(), lat.g() - 2);
        DivClass wall{lat.d() / e, -((lat.g() - 2) / e)};
        cd.eff_rays = {DivClass::F(), *cd.minus_two_class};
        cd.nef_rays = {DivClass::F(), wall};
    } else {
        DivClass r = second_isotropic_class(lat);
        cd.eff_rays = {DivClass::F(), r};
        cd.nef_rays = {DivClass::F(), r};
    }
    return cd;
}

bool is_nef(const PolarizedLattice& lat, DivClass x) {
    ConeData cd = cone_data(lat);
    return lat.intersect(x, cd.eff_rays[0]) >= 0 && lat.intersect(x, cd.eff_rays[1]) >= 0;
}

bool in_effective_cone(const PolarizedLattice& lat, DivClass x) {
    ConeData cd = cone_data(lat);
    return lat.intersect(x, cd.nef_rays[0]) >= 0 && lat.intersect(x, cd.nef_rays[1]) >= 0;
}

std::vector<DivClass> effective_splittings(const PolarizedLattice& lat, DivClass total) {
    std::vector<DivClass> out;
    if (!in_effective_cone(lat, total)) return out;
    // F is always a nef ray, so 0 <= L.F <= total.F pins n to [0, total.n].
    DivClass wall = cone_data(lat).nef_rays[1];
    Int upper = lat.intersect(total, wall);
    Int per_n = lat.intersect(DivClass::H(), wall);
    Int per_m = lat.intersect(DivClass::F(), wall);  // > 0
    for (Int n = 0; n <= total.n; ++n) {
        Int base = checked::mul(n, per_n);
        Int m_lo = ceil_div(checked::sub(0, base), per_m);
        Int m_hi = floor_div(checked::sub(upper, base), per_m);
        for (Int m = m_lo; m <= m_hi; ++m) out.push_back({n, m});
    }
    return out;
}

}  // namespace k3pic
