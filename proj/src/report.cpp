#include "k3pic/report.hpp"

#include <algorithm>
#include <sstream>

namespace k3pic {

using nlohmann::json;

std::string label(DivClass c) {
    auto term = [](Int coeff, const char* sym, bool leading) {
        std::string s;
        if (coeff < 0) s = leading ? "-" : " - ";
        else if (!leading) s = " + ";
        Int mag = coeff < 0 ? -coeff : coeff;
        if (mag != 1) s += std::to_string(mag);
        return s + sym;
    };
    if (c.is_zero()) return "0";
    std::string out;
    if (c.n != 0) out += term(c.n, "H", true);
    if (c.m != 0) out += term(c.m, "F", out.empty());
    return out;
}

json to_json(DivClass c) { return json{{"n", c.n}, {"m", c.m}, {"label", label(c)}}; }

json to_json(const std::vector<DivClass>& cs) {
    json arr = json::array();
    for (DivClass c : cs) arr.push_back(to_json(c));
    return arr;
}

json to_json(const PolarizedLattice& lat) {
    auto gram = lat.gram();
    return json{{"g", lat.g()},
                {"d", lat.d()},
                {"gram", json::array({json::array({gram[0][0], gram[0][1]}),
                                      json::array({gram[1][0], gram[1][1]})})}};
}

json to_json(const ConeData& cd) {
    json j;
    j["minus_two_class"] = cd.minus_two_class ? to_json(*cd.minus_two_class) : json(nullptr);
    j["isotropic_primitives"] = to_json(cd.isotropic_primitives);
    j["eff_rays"] = to_json(std::vector<DivClass>(cd.eff_rays.begin(), cd.eff_rays.end()));
    j["nef_rays"] = to_json(std::vector<DivClass>(cd.nef_rays.begin(), cd.nef_rays.end()));
    return j;
}

json to_json(const CohomologyVector& v) {
    return json{{"h0", v.h0}, {"h1", v.h1}, {"h2", v.h2}, {"chi", v.chi}};
}

json to_json(const PositivityReport& p) {
    json kind{{"kind", to_string(p.pencil_kind)}};
    if (p.pencil_kind == PencilKind::EllipticPencilMultiple) kind["k"] = p.pencil_multiple;
    return json{{"effective", p.effective},
                {"nef", p.nef},
                {"base_point_free", p.base_point_free},
                {"very_ample", p.very_ample},
                {"pencil_kind", kind}};
}

json to_json(const CliffordReport& r) {
    return json{{"mu", r.mu ? json(*r.mu) : json(nullptr)},
                {"cliff", r.cliff},
                {"a0_classes", to_json(r.a0_classes)},
                {"generic_bound", r.generic_bound}};
}

json to_json(const AcmVerdict& v) {
    json failures = json::array();
    for (const auto& f : v.failures) failures.push_back(json{{"l", f.twist}, {"h1", f.h1}});
    return json{{"acm", v.acm},
                {"initialized", v.initialized},
                {"window", json::array({v.window_lo, v.window_hi})},
                {"failures", failures}};
}

json to_json(const LmInvariants& inv) {
    return json{{"rank", inv.rank}, {"c1", to_json(inv.c1)}, {"c2", inv.c2},
                {"chi", inv.chi},   {"h0", inv.h0},          {"slope_threshold", inv.slope_threshold}};
}

json to_json(const StabilityVerdict& v) {
    return json{{"tag", to_string(v.tag)}, {"witnesses", to_json(v.witnesses)}};
}

json to_json(const DmCandidate& c) {
    return json{{"sub", to_json(c.sub)},
                {"quotient", to_json(c.quotient)},
                {"pairing", c.pairing},
                {"quotient_is_pencil", c.quotient_is_pencil}};
}

json to_json(const CheckResult& r) {
    json j{{"check_id", r.check_id}, {"g", r.g}, {"d", r.d}, {"passed", r.passed}};
    j["certificate"] = r.certificate ? *r.certificate : json(nullptr);
    return j;
}

json make_report(const std::string& command, json inputs, json result) {
    return json{{"schema_version", kSchemaVersion},
                {"command", command},
                {"inputs", std::move(inputs)},
                {"result", std::move(result)}};
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

namespace {

void flatten_into(const json& j, const std::string& path,
                  std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        if (j.empty()) out.emplace_back(path, "{}");
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten_into(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    } else if (j.is_array()) {
        if (j.empty()) out.emplace_back(path, "[]");
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten_into(j[i], path + "[" + std::to_string(i) + "]", out);
    } else if (j.is_string()) {
        out.emplace_back(path, j.get<std::string>());
    } else {
        out.emplace_back(path, j.dump());
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

}  // namespace

std::vector<std::pair<std::string, std::string>> flatten(const json& j) {
    std::vector<std::pair<std::string, std::string>> out;
    flatten_into(j, "", out);
    return out;
}

void write_csv(std::ostream& os, const json& report) {
    os << "path,value\n";
    for (const auto& [k, v] : flatten(report)) os << csv_field(k) << ',' << csv_field(v) << '\n';
}

void write_table(std::ostream& os, const json& report) {
    auto rows = flatten(report);
    std::size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    for (const auto& [k, v] : rows) os << k << std::string(width - k.size() + 2, ' ') << v << '\n';
}

}  // namespace k3pic
