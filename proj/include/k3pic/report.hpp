// JSON encoding of every result type, and the flattened row view used by the
// csv and table output formats.
#ifndef K3PIC_REPORT_HPP
#define K3PIC_REPORT_HPP

#include "k3pic/acm.hpp"
#include "k3pic/clifford.hpp"
#include "k3pic/cohomology.hpp"
#include "k3pic/lattice.hpp"
#include "k3pic/lm_bundle.hpp"
#include "k3pic/verify.hpp"

#include <nlohmann/json.hpp>

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace k3pic {

inline constexpr const char* kSchemaVersion = "1.0.0";

/// "2H - 3F" style label; "0" for the zero class.
std::string label(DivClass c);

nlohmann::json to_json(DivClass c);
nlohmann::json to_json(const std::vector<DivClass>& cs);
nlohmann::json to_json(const PolarizedLattice& lat);
nlohmann::json to_json(const ConeData& cd);
nlohmann::json to_json(const CohomologyVector& v);
nlohmann::json to_json(const PositivityReport& p);
nlohmann::json to_json(const CliffordReport& r);
nlohmann::json to_json(const AcmVerdict& v);
nlohmann::json to_json(const LmInvariants& inv);
nlohmann::json to_json(const StabilityVerdict& v);
nlohmann::json to_json(const DmCandidate& c);
nlohmann::json to_json(const CheckResult& r);

/// {"schema_version", "command", "inputs", "result"}.
nlohmann::json make_report(const std::string& command, nlohmann::json inputs, nlohmann::json result);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string dump_json(const nlohmann::json& j);

/// Depth-first (path, scalar) pairs; paths look like result.checks[3].passed.
std::vector<std::pair<std::string, std::string>> flatten(const nlohmann::json& j);

void write_csv(std::ostream& os, const nlohmann::json& report);
void write_table(std::ostream& os, const nlohmann::json& report);

}  // namespace k3pic

#endif  // K3PIC_REPORT_HPP
