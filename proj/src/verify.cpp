#include "k3pic/verify.hpp"

#include "k3pic/acm.hpp"
#include "k3pic/clifford.hpp"
#include "k3pic/cohomology.hpp"
#include "k3pic/lm_bundle.hpp"
#include "k3pic/report.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>

namespace k3pic {

namespace {

using nlohmann::json;

struct Outcome {
    bool passed = true;
    std::optional<json> certificate;
};

json class_with_cohomology(const PolarizedLattice& lat, DivClass c) {
    json j = to_json(c);
    j["cohomology"] = to_json(cohomology(lat, c));
    return j;
}

json classes_with_cohomology(const PolarizedLattice& lat, const std::vector<DivClass>& cs) {
    json arr = json::array();
    for (DivClass c : cs) arr.push_back(class_with_cohomology(lat, c));
    return arr;
}

// Enumeration radius large enough to contain every special class of the
// lattice: Gamma has |m| = g/d and the second isotropic class |m| <= g - 1.
Int geometry_radius(const PolarizedLattice& lat, Int box_radius) {
    return std::max(box_radius, lat.g());
}

Outcome check_minus_two(const PolarizedLattice& lat, Int radius) {
    Outcome o;
    std::vector<DivClass> found = solve_square(lat, -2, geometry_radius(lat, radius));
    auto pair = minus_two_classes(lat);
    std::vector<DivClass> expected;
    if (pair) expected = {pair->first, pair->second};
    std::sort(expected.begin(), expected.end());

    bool ok = found == expected && pair.has_value() == lat.d_divides_g();
    if (pair) {
        DivClass gamma = pair->first;
        ok = ok && gamma == DivClass{1, -(lat.g() / lat.d())} && lat.degree(gamma) > 0;
    }
    o.passed = ok;
    json cert;
    cert["enumerated"] = to_json(found);
    if (pair) cert["class"] = class_with_cohomology(lat, pair->first);
    if (pair || !ok) o.certificate = cert;
    return o;
}

Outcome check_elliptic_pencil(const PolarizedLattice& lat, Int radius) {
    Outcome o;
    const Int r = geometry_radius(lat, radius);
    std::vector<DivClass> walls;
    for (DivClass c : solve_square(lat, -2, r))
        if (lat.degree(c) > 0) walls.push_back(c);

    std::vector<DivClass> found;
    for (DivClass c : solve_square(lat, 0, r)) {
        if (!c.is_primitive() || lat.degree(c) <= 0) continue;
        // Isotropic with positive degree lies on the closed positive cone; only
        // the (-2)-walls can obstruct nefness.
        bool nef = std::all_of(walls.begin(), walls.end(),
                               [&](DivClass w) { return lat.intersect(c, w) >= 0; });
        if (nef) found.push_back(c);
    }
    std::vector<DivClass> expected = elliptic_pencil_classes(lat);
    std::sort(expected.begin(), expected.end());

    bool ok = found == expected;
    for (DivClass p : expected) ok = ok && is_nef(lat, p);
    if (!lat.d_divides_g()) {
        DivClass second = second_isotropic_class(lat);
        ok = ok && second.n > 0 &&
             checked::add(checked::mul(second.n, lat.g() - 1), checked::mul(second.m, lat.d())) == 0 &&
             checked::mul(second.n, lat.g() - 1) == lcm(lat.g() - 1, lat.d());
    }
    o.passed = ok;
    if (!ok) {
        json cert;
        cert["enumerated"] = classes_with_cohomology(lat, found);
        cert["expected"] = classes_with_cohomology(lat, expected);
        o.certificate = cert;
    }
    return o;
}

Outcome check_very_ample_h(const PolarizedLattice& lat, Int) {
    Outcome o;
    PositivityReport p = positivity(lat, DivClass::H());
    o.passed = p.very_ample;
    if (!o.passed) o.certificate = json{{"class", class_with_cohomology(lat, DivClass::H())},
                                        {"positivity", to_json(p)}};
    return o;
}

Outcome check_bpf_h_minus_f(const PolarizedLattice& lat, Int) {
    Outcome o;
    DivClass c = DivClass::H() - DivClass::F();
    PositivityReport p = positivity(lat, c);
    o.passed = p.base_point_free;
    if (!o.passed)
        o.certificate = json{{"class", class_with_cohomology(lat, c)}, {"positivity", to_json(p)}};
    return o;
}

Outcome check_cliff(const PolarizedLattice& lat, Int) {
    Outcome o;
    CliffordReport rep = clifford_index(lat);
    o.passed = rep.cliff == lat.d() - 2 && (!rep.mu || *rep.mu >= 0) && check_a0_properties(lat);
    json cert = to_json(rep);
    cert["a0_classes"] = classes_with_cohomology(lat, rep.a0_classes);
    cert["expected"] = lat.d() - 2;
    o.certificate = cert;
    return o;
}

Outcome check_acm(const PolarizedLattice& lat, Int radius) {
    Outcome o;
    const DivClass f = DivClass::F();
    const DivClass hf = DivClass::H() - DivClass::F();
    std::vector<DivClass> found = classify_acm_initialized(lat, radius);
    o.passed = std::all_of(found.begin(), found.end(), [&](DivClass c) { return c == f || c == hf; });
    if (!o.passed || found.size() != 2) o.certificate = json{{"found", classes_with_cohomology(lat, found)}};
    return o;
}

Outcome check_stability(const PolarizedLattice& lat, Int) {
    Outcome o;
    const Int g = lat.g();
    const Int d = lat.d();
    std::vector<DivClass> search = destabilizer_search(lat);
    StabilityVerdict by_f = stability_classify(lat, PencilMarker::CutByF);
    StabilityVerdict other = stability_classify(lat, PencilMarker::Other);
    std::vector<DivClass> witnesses = by_f.witnesses;
    std::sort(witnesses.begin(), witnesses.end());

    bool ok = witnesses == search && other.tag == StabilityTag::Stable && other.witnesses.empty();
    bool any_above = std::any_of(search.begin(), search.end(),
                                 [&](DivClass m) { return lat.degree(m) > g - 1; });
    bool all_equal = !search.empty() && std::all_of(search.begin(), search.end(),
                                                    [&](DivClass m) { return lat.degree(m) == g - 1; });
    ok = ok && ((by_f.tag == StabilityTag::Unstable) == any_above);
    ok = ok && ((by_f.tag == StabilityTag::StrictlySemistable) == all_equal);
    if (d == g) ok = ok && by_f.tag == StabilityTag::Stable && search.empty();
    if (d == g - 1) ok = ok && by_f.tag == StabilityTag::StrictlySemistable;
    if (d < g - 1) {
        const DivClass hf = DivClass::H() - DivClass::F();
        ok = ok && by_f.tag == StabilityTag::Unstable && search == std::vector<DivClass>{hf} &&
             lat.degree(hf) == 2 * g - 2 - d;
    }
    o.passed = ok;
    if (!ok || !search.empty()) {
        json cert;
        cert["search"] = classes_with_cohomology(lat, search);
        cert["verdict"] = to_json(by_f);
        o.certificate = cert;
    }
    return o;
}

Outcome check_gonality(const PolarizedLattice& lat, Int) {
    Outcome o;
    const Int g = lat.g();
    const Int d = lat.d();
    std::vector<DivClass> pencils = gonality_pencil_classes(lat);
    std::size_t expected = d == g - 1 ? 2 : 1;
    bool listed = (g == 4 && d == 3) || (g == 5 && d == 4);
    o.passed = pencils.size() == expected && (d == g - 1) == listed;
    if (!o.passed) o.certificate = json{{"pencils", classes_with_cohomology(lat, pencils)}};
    return o;
}

Outcome check_cohomology(const PolarizedLattice& lat, Int radius) {
    Outcome o;
    const DivClass h = DivClass::H();
    std::vector<DivClass> effective_steps = {DivClass::F(), second_isotropic_class(lat)};
    if (auto gamma = positive_minus_two_class(lat)) effective_steps.push_back(*gamma);

    auto fail = [&](const std::string& what, const std::vector<DivClass>& classes) {
        o.passed = false;
        o.certificate = json{{"violation", what}, {"classes", classes_with_cohomology(lat, classes)}};
    };

    for (Int n = -radius; n <= radius && o.passed; ++n) {
        for (Int m = -radius; m <= radius && o.passed; ++m) {
            DivClass c{n, m};
            CohomologyVector v;
            try {
                v = cohomology(lat, c);
            } catch (const InvariantError&) {
                o.passed = false;
                o.certificate = json{{"violation", "h1 < 0"}, {"class", to_json(c)},
                                     {"h0", h0(lat, c)}, {"h2", h0(lat, -c)}};
                break;
            }
            if (v.h2 != h0(lat, -c)) fail("serre duality", {c});
            else if (v.h0 - v.h1 + v.h2 != lat.square(c) / 2 + 2) fail("riemann-roch", {c});
            for (DivClass p : effective_steps)
                if (o.passed && h0(lat, c + p) < v.h0) fail("monotonicity", {c, p});
        }
    }
    if (o.passed && h0(lat, h) != lat.g() + 1) fail("h0(H) != g+1", {h});
    if (o.passed && lm_invariants(lat).h0 != lat.g() + 3 - lat.d()) {
        o.passed = false;
        o.certificate = json{{"violation", "h0(E) != g+3-d"}, {"lm", to_json(lm_invariants(lat))}};
    }
    return o;
}

using CheckFn = std::function<Outcome(const PolarizedLattice&, Int)>;

const std::map<std::string, CheckFn>& check_table() {
    static const std::map<std::string, CheckFn> table = {
        {"acm", check_acm},
        {"bpf_h_minus_f", check_bpf_h_minus_f},
        {"cliff", check_cliff},
        {"cohomology", check_cohomology},
        {"elliptic_pencil", check_elliptic_pencil},
        {"gonality", check_gonality},
        {"minus_two", check_minus_two},
        {"stability", check_stability},
        {"very_ample_h", check_very_ample_h},
    };
    return table;
}

bool applicable(const std::string& id, const PolarizedLattice& lat) {
    if (id == "bpf_h_minus_f") return lat.d() <= lat.g() - 1;
    return true;
}

}  // namespace

const std::vector<std::string>& all_check_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, fn] : check_table()) v.push_back(id);
        return v;
    }();
    return ids;
}

void validate(const SweepConfig& cfg) {
    if (cfg.g_max < 3) throw std::invalid_argument("g_max must be >= 3");
    if (cfg.g_max > kCoefficientCap) throw std::invalid_argument("g_max exceeds cap 1000000");
    if (cfg.box_radius < 2) throw std::invalid_argument("box radius must be >= 2");
    for (const auto& id : cfg.checks)
        if (!check_table().count(id)) throw std::invalid_argument("unknown check id: " + id);
}

std::vector<DivClass> solve_square(const PolarizedLattice& lat, Int target, Int radius) {
    std::vector<DivClass> out;
    for (Int n = -radius; n <= radius; ++n)
        for (Int m = -radius; m <= radius; ++m)
            if (lat.square({n, m}) == target) out.push_back({n, m});
    return out;
}

CheckResult run_check(const std::string& check_id, const PolarizedLattice& lat, Int box_radius) {
    auto it = check_table().find(check_id);
    if (it == check_table().end()) throw std::invalid_argument("unknown check id: " + check_id);
    CheckResult r;
    r.check_id = check_id;
    r.g = lat.g();
    r.d = lat.d();
    try {
        Outcome o = it->second(lat, box_radius);
        r.passed = o.passed;
        r.certificate = o.certificate;
    } catch (const OverflowError& e) {
        r.passed = false;
        r.certificate = json{{"overflow", e.what()}};
    } catch (const InvariantError& e) {
        r.passed = false;
        r.certificate = json{{"invariant", e.what()}};
    }
    if (!r.passed && !r.certificate) r.certificate = json::object();
    return r;
}

std::vector<CheckResult> run_sweep(const SweepConfig& cfg) {
    validate(cfg);
    std::vector<std::string> ids;
    for (const auto& id : all_check_ids())
        if (cfg.checks.empty() || cfg.checks.count(id)) ids.push_back(id);

    std::vector<PolarizedLattice> cells;
    for (Int g = 3; g <= cfg.g_max; ++g)
        for (Int d = 3; d <= PolarizedLattice::max_d(g); ++d) cells.emplace_back(g, d);

    std::vector<std::vector<CheckResult>> per_cell(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            for (const auto& id : ids)
                if (applicable(id, cells[i])) per_cell[i].push_back(run_check(id, cells[i], cfg.box_radius));
        }
    };

    unsigned jobs = cfg.parallelism ? cfg.parallelism : std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(cells.size(), 1)));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::vector<CheckResult> out;
    for (auto& cell : per_cell)
        for (auto& r : cell) out.push_back(std::move(r));
    return out;
}

}  // namespace k3pic
