// Sweep harness: re-derives the classification results cell by cell over a
// range of (g, d) against brute-force enumeration.
#ifndef K3PIC_VERIFY_HPP
#define K3PIC_VERIFY_HPP

#include "k3pic/lattice.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace k3pic {

/// Known check identifiers, in canonical (sorted) order.
const std::vector<std::string>& all_check_ids();

struct SweepConfig {
    Int g_max = 10;
    Int box_radius = 10;
    /// Empty selects every check.
    std::set<std::string> checks;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned parallelism = 0;
};

struct CheckResult {
    std::string check_id;
    Int g = 0;
    Int d = 0;
    bool passed = false;
    /// Always present on failure; some passing checks attach the classes they found.
    std::optional<nlohmann::json> certificate;
};

/// Throws std::invalid_argument for g_max < 3, box_radius < 2 or an unknown check id.
void validate(const SweepConfig& cfg);

/// Runs one check on one lattice. Overflow is reported as a failed result.
CheckResult run_check(const std::string& check_id, const PolarizedLattice& lat, Int box_radius);

/// Results ordered by (g, d, check_id), independent of parallelism.
std::vector<CheckResult> run_sweep(const SweepConfig& cfg);

/// Brute-force solutions of x.x = target with |n|,|m| <= radius, sorted by (n, m).
std::vector<DivClass> solve_square(const PolarizedLattice& lat, Int target, Int radius);

}  // namespace k3pic

#endif  // K3PIC_VERIFY_HPP
