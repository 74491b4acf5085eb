#include "k3pic/cli.hpp"

#include "k3pic/acm.hpp"
#include "k3pic/clifford.hpp"
#include "k3pic/cohomology.hpp"
#include "k3pic/lm_bundle.hpp"
#include "k3pic/report.hpp"
#include "k3pic/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>

namespace k3pic::cli {

using nlohmann::json;

namespace {

Int parse_int(const std::string& s) {
    Int v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec == std::errc::result_out_of_range) throw OverflowError("integer out of range: " + s);
    if (ec != std::errc() || ptr != last || first == last)
        throw std::invalid_argument("not an integer: '" + s + "'");
    return v;
}

PencilMarker parse_marker(const std::string& s) {
    if (s == "f") return PencilMarker::CutByF;
    if (s == "h-f") return PencilMarker::CutByHMinusF;
    if (s == "other") return PencilMarker::Other;
    throw std::invalid_argument("marker must be one of f, h-f, other");
}

std::set<std::string> parse_checks(const std::string& list) {
    std::set<std::string> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.insert(item);
    return out;
}

struct LatticeArgs {
    Int g = 0;
    Int d = 0;
    void add_to(CLI::App* cmd) {
        cmd->add_option("--g", g, "sectional genus g >= 3")->required();
        cmd->add_option("--d", d, "H.F, with 3 <= d <= floor((g+3)/2)")->required();
    }
    json echo() const { return json{{"g", g}, {"d", d}}; }
};

}  // namespace

DivClass parse_class(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
        throw std::invalid_argument("class must be written N,M (meaning nH + mF), got '" + text + "'");
    DivClass c{parse_int(text.substr(0, comma)), parse_int(text.substr(comma + 1))};
    require_within_caps(c);
    return c;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        bool stdout_is_terminal) {
    CLI::App app{"Exact arithmetic on rank-2 polarized K3 Picard lattices ZH + ZF"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format;
    app.add_option("--format", format, "json, csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}));

    LatticeArgs lattice_args, coh_args, cliff_args, acm_args, lm_args;

    auto* lattice_cmd = app.add_subcommand("lattice", "Gram matrix, cones and special classes");
    lattice_args.add_to(lattice_cmd);

    std::string class_text;
    auto* coh_cmd = app.add_subcommand("coh", "Cohomology and positivity of a class");
    coh_args.add_to(coh_cmd);
    coh_cmd->add_option("--class", class_text, "N,M for nH + mF")->required()->allow_extra_args(false);

    auto* cliff_cmd = app.add_subcommand("clifford", "Clifford index of H");
    cliff_args.add_to(cliff_cmd);

    std::string acm_class;
    bool classify = false;
    Int radius = kDefaultAcmRadius;
    auto* acm_cmd = app.add_subcommand("acm", "ACM verdict of a class, or classification in a box");
    acm_args.add_to(acm_cmd);
    auto* acm_class_opt = acm_cmd->add_option("--class", acm_class, "N,M for nH + mF");
    auto* classify_opt = acm_cmd->add_flag("--classify", classify, "classify ACM+initialized classes");
    acm_cmd->add_option("--radius", radius, "box radius for --classify (>= 2)")->needs(classify_opt);
    acm_class_opt->excludes(classify_opt);

    Int d2 = 0, cd = 0;
    bool has_d_minus_c = false, has_2c_minus_d = false;
    auto* qacm_cmd = app.add_subcommand("quartic-acm", "ACM+initialized criterion on a smooth quartic");
    qacm_cmd->add_option("--d2", d2, "D^2")->required();
    qacm_cmd->add_option("--cd", cd, "C.D")->required();
    qacm_cmd->add_flag("--has-d-minus-c", has_d_minus_c, "|D - C| is nonempty");
    qacm_cmd->add_flag("--has-2c-minus-d", has_2c_minus_d, "|2C - D| is nonempty");

    auto* qsplit_cmd = app.add_subcommand("quartic-splitting", "Splitting types (L.H, L^2) on a quartic");

    std::string marker_text = "f";
    auto* lm_cmd = app.add_subcommand("lm", "Lazarsfeld-Mukai bundle of a gonality pencil");
    lm_args.add_to(lm_cmd);
    lm_cmd->add_option("--marker", marker_text, "restriction O_C(Z): f, h-f or other")
        ->check(CLI::IsMember({"f", "h-f", "other"}));

    Int g_max = 10, verify_radius = 10;
    std::string checks_text;
    unsigned jobs = 0;
    auto* verify_cmd = app.add_subcommand("verify", "Sweep every check over a range of lattices");
    verify_cmd->add_option("--g-max", g_max, "largest genus swept")->required();
    verify_cmd->add_option("--radius", verify_radius, "box radius for enumeration checks")->required();
    verify_cmd->add_option("--checks", checks_text, "comma-separated check ids (default: all)");
    verify_cmd->add_option("--jobs", jobs, "worker threads, 0 = auto");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }

    int code = kOk;
    json report;
    try {
        if (*lattice_cmd) {
            PolarizedLattice lat(lattice_args.g, lattice_args.d);
            json minus_two = json::array();
            if (auto pair = minus_two_classes(lat)) minus_two = to_json(std::vector<DivClass>{pair->first, pair->second});
            json result{{"lattice", to_json(lat)},
                        {"determinant", -lat.d() * lat.d()},
                        {"cones", to_json(cone_data(lat))},
                        {"minus_two_classes", minus_two},
                        {"elliptic_pencil_classes", to_json(elliptic_pencil_classes(lat))}};
            report = make_report("lattice", lattice_args.echo(), result);
        } else if (*coh_cmd) {
            PolarizedLattice lat(coh_args.g, coh_args.d);
            DivClass c = parse_class(class_text);
            json inputs = coh_args.echo();
            inputs["class"] = to_json(c);
            json result{{"class", to_json(c)},
                        {"cohomology", to_json(cohomology(lat, c))},
                        {"positivity", to_json(positivity(lat, c))}};
            report = make_report("coh", inputs, result);
        } else if (*cliff_cmd) {
            PolarizedLattice lat(cliff_args.g, cliff_args.d);
            json result = to_json(clifford_index(lat));
            result["A"] = to_json(enumerate_A(lat));
            result["a0_properties_hold"] = check_a0_properties(lat);
            report = make_report("clifford", cliff_args.echo(), result);
        } else if (*acm_cmd) {
            PolarizedLattice lat(acm_args.g, acm_args.d);
            json inputs = acm_args.echo();
            json result;
            if (classify) {
                inputs["radius"] = radius;
                result = json{{"radius", radius}, {"classes", to_json(classify_acm_initialized(lat, radius))}};
            } else {
                if (acm_class.empty()) throw std::invalid_argument("acm needs --class N,M or --classify");
                DivClass c = parse_class(acm_class);
                inputs["class"] = to_json(c);
                result = to_json(is_acm(lat, c));
                result["class"] = to_json(c);
            }
            report = make_report("acm", inputs, result);
        } else if (*qacm_cmd) {
            json inputs{{"d2", d2}, {"cd", cd}, {"has_d_minus_c", has_d_minus_c},
                        {"has_2c_minus_d", has_2c_minus_d}};
            json result{{"acm_initialized", quartic_acm_predicate(d2, cd, has_d_minus_c, has_2c_minus_d)}};
            report = make_report("quartic-acm", inputs, result);
        } else if (*qsplit_cmd) {
            json types = json::array();
            for (auto [deg, sq] : quartic_splitting_types())
                types.push_back(json{{"degree", deg}, {"square", sq}});
            report = make_report("quartic-splitting", json::object(), json{{"types", types}});
        } else if (*lm_cmd) {
            PolarizedLattice lat(lm_args.g, lm_args.d);
            PencilMarker marker = parse_marker(marker_text);
            json inputs = lm_args.echo();
            inputs["marker"] = marker_text;
            json dm = json::array();
            for (const auto& cand : dm_candidates(lat)) dm.push_back(to_json(cand));
            json result{{"invariants", to_json(lm_invariants(lat))},
                        {"dm_candidates", dm},
                        {"stability", to_json(stability_classify(lat, marker))},
                        {"destabilizer_search", to_json(destabilizer_search(lat))},
                        {"gonality_pencils", to_json(gonality_pencil_classes(lat))}};
            report = make_report("lm", inputs, result);
        } else if (*verify_cmd) {
            SweepConfig cfg;
            cfg.g_max = g_max;
            cfg.box_radius = verify_radius;
            cfg.checks = parse_checks(checks_text);
            cfg.parallelism = jobs;
            validate(cfg);
            std::vector<CheckResult> results = run_sweep(cfg);
            json checks = json::array();
            Int failed = 0;
            bool overflowed = false;
            for (const auto& r : results) {
                checks.push_back(to_json(r));
                if (!r.passed) {
                    ++failed;
                    if (r.certificate && r.certificate->contains("overflow")) overflowed = true;
                }
            }
            json inputs{{"g_max", g_max},
                        {"radius", verify_radius},
                        {"checks", cfg.checks.empty() ? json(all_check_ids()) : json(cfg.checks)}};
            json summary{{"total", static_cast<Int>(results.size())},
                         {"passed", static_cast<Int>(results.size()) - failed},
                         {"failed", failed}};
            report = make_report("verify", inputs, json{{"checks", checks}, {"summary", summary}});
            if (failed) code = overflowed ? kOverflow : kCheckFailed;
        }
    } catch (const OverflowError& e) {
        err << "overflow: " << e.what() << '\n';
        return kOverflow;
    } catch (const InvalidLatticeError& e) {
        err << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << '\n';
        return kInvalidInput;
    }

    if (format.empty()) format = stdout_is_terminal ? "table" : "json";
    if (format == "json") out << dump_json(report);
    else if (format == "csv") write_csv(out, report);
    else write_table(out, report);
    return code;
}

}  // namespace k3pic::cli
