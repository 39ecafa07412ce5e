#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swcalc/basic_classes.hpp"
#include "swcalc/demos.hpp"
#include "swcalc/expr.hpp"
#include "swcalc/geography.hpp"
#include "swcalc/json_io.hpp"
#include "swcalc/lefschetz.hpp"

namespace {

using swcalc::CalcError;
using swcalc::Int;
using Json = swcalc::Json;

struct Output {
    std::string format = "text";
    std::string out_path;

    void write(const std::string& payload) const {
        if (out_path.empty()) {
            std::cout << payload;
            if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
            return;
        }
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw CalcError("cannot open output file " + out_path);
        f << payload;
        if (!payload.empty() && payload.back() != '\n') f << '\n';
    }
};

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw CalcError("cannot read " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

bool file_exists(const std::string& path) { return std::ifstream(path).good(); }

/** Look for an expression file: as given, under $SWCALC_EXAMPLES, under ./expressions. */
std::string resolve_input(const std::string& path) {
    if (file_exists(path)) return path;
    std::vector<std::string> tried{path};
    if (const char* env = std::getenv("SWCALC_EXAMPLES")) {
        std::string p = std::string(env) + "/" + path;
        if (file_exists(p)) return p;
        tried.push_back(p);
    }
    std::string p = "expressions/" + path;
    if (file_exists(p)) return p;
    tried.push_back(p);
    std::string msg = "no such expression file, tried:";
    for (const auto& t : tried) msg += " " + t;
    throw CalcError(msg);
}

swcalc::FourManifold eval_file(const std::string& path) {
    return swcalc::eval_expr_text(read_file(resolve_input(path)));
}

// Scalar JSON values render identically in text and csv cells, so every
// format below is derived from the same Json object.
std::string cell(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "unknown";
    return v.dump();
}

std::string record_text(const Json& j) {
    std::ostringstream os;
    os << j.at("name").get<std::string>() << "\n";
    os << "  e = " << cell(j.at("e")) << ", sign = " << cell(j.at("sign"))
       << ", b1 = " << cell(j.at("b1")) << "\n";
    os << "  parity " << cell(j.at("parity")) << ", spin " << cell(j.at("spin"))
       << ", symplectic " << cell(j.at("symplectic")) << ", simply connected "
       << cell(j.at("simply_connected")) << "\n";
    if (!j.at("lattice").is_null()) {
        os << "  tracked classes:";
        for (const auto& l : j.at("lattice").at("labels")) os << " " << l.get<std::string>();
        os << "\n";
    }
    const Json& sw = j.at("sw");
    os << "  sw: " << cell(sw.at("kind"));
    if (sw.contains("value")) os << " " << sw.at("value").dump();
    if (sw.contains("terms")) os << " " << sw.at("terms").dump();
    if (sw.contains("note")) os << " (" << cell(sw.at("note")) << ")";
    os << "\n";
    os << "  canonical: " << (j.at("canonical").is_null() ? "none" : j.at("canonical").dump())
       << "\n";
    os << "  surfaces:";
    for (const auto& s : j.at("surfaces"))
        os << " " << s.at("label").get<std::string>() << "(genus " << cell(s.at("genus"))
           << ", sq " << cell(s.at("self_int")) << ")";
    os << "\n";
    if (!j.at("flags").empty()) {
        os << "  flags:";
        for (const auto& [k, v] : j.at("flags").items()) os << " " << k << "=" << cell(v);
        os << "\n";
    }
    return os.str();
}

std::string kv_csv(const Json& j) {
    std::ostringstream os;
    os << "field,value\n";
    for (const auto& [k, v] : j.items()) os << k << "," << (v.is_structured() ? v.dump() : cell(v)) << "\n";
    return os.str();
}

std::string quote_csv(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

void emit_record(const swcalc::FourManifold& m, const Output& out) {
    Json j = swcalc::manifold_to_json(m);
    if (out.format == "json")
        out.write(j.dump(2));
    else if (out.format == "csv")
        out.write(kv_csv(j));
    else
        out.write(record_text(j));
}

Json chars_json(const swcalc::FourManifold& m) {
    Json j;
    j["name"] = m.name;
    j["e"] = swcalc::detail::int_to_json(m.e);
    j["sign"] = swcalc::detail::int_to_json(m.sign);
    j["b1"] = m.b1 ? swcalc::detail::int_to_json(*m.b1) : Json(nullptr);
    j["c1_squared"] = swcalc::detail::int_to_json(swcalc::c1_squared(m));
    if ((m.e + m.sign) % 4 == 0)
        j["quarter_characteristic"] =
            swcalc::detail::int_to_json(swcalc::quarter_characteristic(m));
    else
        j["quarter_characteristic"] = Json(nullptr);
    return j;
}

int run_demo_command(const std::string& section, const Output& out) {
    std::vector<swcalc::DemoReport> reports;
    if (section == "all")
        for (const auto& s : swcalc::demo_sections()) reports.push_back(swcalc::run_demo(s));
    else
        reports.push_back(swcalc::run_demo(section));

    bool all_pass = true;
    Json jr = Json::array();
    std::ostringstream text;
    for (const auto& r : reports) {
        if (!r.all_pass()) all_pass = false;
        text << "== " << r.section << "\n";
        Json js;
        js["section"] = r.section;
        Json lines = Json::array();
        for (const auto& l : r.lines) {
            text << (l.pass ? "PASS" : "FAIL") << "  " << l.label << ": expected " << l.expected
                 << ", got " << l.got << "\n";
            Json jl;
            jl["label"] = l.label;
            jl["expected"] = l.expected;
            jl["got"] = l.got;
            jl["pass"] = l.pass;
            lines.push_back(std::move(jl));
        }
        js["lines"] = std::move(lines);
        js["all_pass"] = r.all_pass();
        jr.push_back(std::move(js));
    }

    if (out.format == "json") {
        out.write(jr.dump(2));
    } else if (out.format == "csv") {
        std::ostringstream csv;
        csv << "section,label,expected,got,pass\n";
        for (const auto& r : jr)
            for (const auto& l : r.at("lines"))
                csv << cell(r.at("section")) << "," << quote_csv(cell(l.at("label"))) << ","
                    << quote_csv(cell(l.at("expected"))) << "," << quote_csv(cell(l.at("got")))
                    << "," << (l.at("pass").get<bool>() ? "pass" : "fail") << "\n";
        out.write(csv.str());
    } else {
        text << (all_pass ? "all checks pass" : "some checks FAILED") << "\n";
        out.write(text.str());
    }
    return all_pass ? 0 : 1;
}

std::pair<int, int> parse_range(const std::string& s, const std::string& what) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(s);
            return {v, v};
        }
        return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw CalcError(what + ": expected a range like 1..6, got '" + s + "'");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariant calculus for glued and surgered 4-manifold records"};
    app.require_subcommand(1);

    Output out;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", out.out_path, "write output to a file instead of stdout");

    std::string file_a, file_b, section = "all", scenario = "y2g";
    std::string m_range = "1..6", g_range = "1..8";
    int opt_n = 2, opt_g = 2;
    bool audit = false;
    std::vector<int> lengths{1};

    auto* c_eval = app.add_subcommand("eval", "evaluate an expression file to a full record")->fallthrough();
    c_eval->add_option("file", file_a, "expression file")->required();

    auto* c_sw = app.add_subcommand("sw", "evaluate and print only the invariant value")->fallthrough();
    c_sw->add_option("file", file_a, "expression file")->required();

    auto* c_chars = app.add_subcommand("chars", "evaluate and print characteristic numbers")->fallthrough();
    c_chars->add_option("file", file_a, "expression file")->required();

    auto* c_homeo = app.add_subcommand("homeo", "compare the topological types of two records")->fallthrough();
    c_homeo->add_option("fileA", file_a, "first expression file")->required();
    c_homeo->add_option("fileB", file_b, "second expression file")->required();

    auto* c_geo = app.add_subcommand("geography", "scan the spin family over a rectangle")->fallthrough();
    c_geo->add_option("--m-range", m_range, "m range a..b")->capture_default_str();
    c_geo->add_option("--g-range", g_range, "g range c..d")->capture_default_str();

    auto* c_bc = app.add_subcommand("basic-classes", "enumerate adjunction-constrained classes")->fallthrough();
    c_bc->add_option("--scenario", scenario, "scenario family")
        ->check(CLI::IsMember({"y2g", "yng", "yprime"}))
        ->capture_default_str();
    c_bc->add_option("--n", opt_n, "chain length parameter (yng)")->capture_default_str();
    c_bc->add_option("--g", opt_g, "fiber genus")->capture_default_str();
    c_bc->add_option("--lengths", lengths, "parallel-copy counts (yprime)")->capture_default_str();

    auto* c_lef = app.add_subcommand("lefschetz", "fibration bookkeeping for given n, g")->fallthrough();
    c_lef->add_option("--n", opt_n, "elliptic parameter")->required();
    c_lef->add_option("--g", opt_g, "knot genus")->required();
    c_lef->add_flag("--audit", audit, "include the vanishing-cycle split");

    auto* c_demo = app.add_subcommand("demo", "run a golden reproduction bundle")->fallthrough();
    c_demo->add_option("section", section, "bundle name or 'all'")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_eval->parsed()) {
            emit_record(eval_file(file_a), out);
        } else if (c_sw->parsed()) {
            swcalc::FourManifold m = eval_file(file_a);
            Json j = swcalc::sw_to_json(m.sw);
            if (out.format == "json")
                out.write(j.dump(2));
            else if (out.format == "csv")
                out.write(kv_csv(j));
            else
                out.write(swcalc::sw_str(m.sw));
        } else if (c_chars->parsed()) {
            Json j = chars_json(eval_file(file_a));
            if (out.format == "json")
                out.write(j.dump(2));
            else if (out.format == "csv")
                out.write(kv_csv(j));
            else {
                std::ostringstream os;
                for (const auto& [k, v] : j.items()) os << k << " = " << cell(v) << "\n";
                out.write(os.str());
            }
        } else if (c_homeo->parsed()) {
            swcalc::FourManifold a = eval_file(file_a);
            swcalc::FourManifold b = eval_file(file_b);
            swcalc::HomeoVerdict v = swcalc::homeo_compare(a, b);
            Json j;
            j["verdict"] = swcalc::homeo_str(v.result);
            j["reason"] = v.reason;
            for (const auto* m : {&a, &b}) {
                Json t;
                t["name"] = m->name;
                t["e"] = swcalc::detail::int_to_json(m->e);
                t["sign"] = swcalc::detail::int_to_json(m->sign);
                t["parity"] = swcalc::parity_str(m->parity);
                j[m == &a ? "first" : "second"] = std::move(t);
            }
            if (out.format == "json")
                out.write(j.dump(2));
            else if (out.format == "csv")
                out.write(kv_csv(j));
            else {
                std::ostringstream os;
                os << cell(j.at("verdict")) << ": " << cell(j.at("reason")) << "\n";
                for (const char* side : {"first", "second"}) {
                    const Json& t = j.at(side);
                    os << "  " << cell(t.at("name")) << ": (e, sign, parity) = ("
                       << cell(t.at("e")) << ", " << cell(t.at("sign")) << ", "
                       << cell(t.at("parity")) << ")\n";
                }
                out.write(os.str());
            }
        } else if (c_geo->parsed()) {
            auto [m_lo, m_hi] = parse_range(m_range, "--m-range");
            auto [g_lo, g_hi] = parse_range(g_range, "--g-range");
            Json rows = Json::array();
            for (const auto& r : swcalc::geography_scan(m_lo, m_hi, g_lo, g_hi)) {
                Json j;
                j["m"] = r.m;
                j["g"] = r.g;
                j["chi"] = swcalc::detail::int_to_json(r.chi);
                j["c1_squared"] = swcalc::detail::int_to_json(r.c1sq);
                j["pointwise"] = swcalc::geo_tag_str(r.pointwise.tag);
                j["restricted"] = r.restricted;
                j["closed_form"] = r.closed_form;
                j["routes_agree"] = r.routes_agree;
                j["pointwise_agrees"] = r.pointwise_agrees;
                rows.push_back(std::move(j));
            }
            if (out.format == "json") {
                out.write(rows.dump(2));
            } else {
                std::ostringstream os;
                const char* sep = out.format == "csv" ? "," : "  ";
                os << "m" << sep << "g" << sep << "chi" << sep << "c1_squared" << sep
                   << "pointwise" << sep << "restricted" << sep << "closed_form" << sep
                   << "routes_agree" << sep << "pointwise_agrees" << "\n";
                for (const auto& j : rows)
                    os << cell(j.at("m")) << sep << cell(j.at("g")) << sep << cell(j.at("chi"))
                       << sep << cell(j.at("c1_squared")) << sep << cell(j.at("pointwise")) << sep
                       << j.at("restricted").dump() << sep << j.at("closed_form").dump() << sep
                       << j.at("routes_agree").dump() << sep << j.at("pointwise_agrees").dump()
                       << "\n";
                out.write(os.str());
            }
        } else if (c_bc->parsed()) {
            swcalc::AdjunctionScenario s;
            if (scenario == "y2g")
                s = swcalc::scenario_Y2g(opt_g);
            else if (scenario == "yng")
                s = swcalc::scenario_Yng(opt_n, opt_g);
            else
                s = swcalc::scenario_Yprime_neg1(opt_g, lengths);
            swcalc::CandidateResult c = swcalc::enumerate_candidates(s);
            Json j;
            j["scenario"] = s.name;
            j["vanishes"] = c.vanishes;
            j["reason"] = c.reason;
            Json cls = Json::array();
            for (const auto& k : c.classes) cls.push_back(swcalc::detail::vec_to_json(k));
            j["classes"] = std::move(cls);
            j["warnings"] = c.warnings;
            if (out.format == "json")
                out.write(j.dump(2));
            else if (out.format == "csv")
                out.write(kv_csv(j));
            else {
                std::ostringstream os;
                os << s.name << ": ";
                if (c.vanishes)
                    os << "invariant vanishes (" << c.reason << ")\n";
                else if (c.classes.empty())
                    os << "no candidate classes\n";
                else {
                    os << c.classes.size() << " candidate classes\n";
                    for (const auto& k : c.classes) os << "  " << swcalc::vec_str(k) << "\n";
                }
                for (const auto& w : c.warnings) os << "  warning: " << w << "\n";
                out.write(os.str());
            }
        } else if (c_lef->parsed()) {
            swcalc::Fibration f = swcalc::enk_fibration(opt_n, opt_g);
            Json j;
            j["fiber_genus"] = swcalc::detail::int_to_json(f.fiber_genus);
            j["base_genus"] = swcalc::detail::int_to_json(f.base_genus);
            j["singular_fibers"] = swcalc::detail::int_to_json(f.singular_fibers);
            j["reducible_fibers"] = f.reducible_fibers
                                        ? swcalc::detail::int_to_json(*f.reducible_fibers)
                                        : Json(nullptr);
            j["hyperelliptic"] = swcalc::tri_str(f.hyperelliptic);
            j["total_e"] = swcalc::detail::int_to_json(f.total_e);
            if (audit) {
                const auto b = swcalc::vanishing_cycle_audit(opt_n, opt_g);
                Json a;
                a["from_base_fibration"] = swcalc::detail::int_to_json(b.from_base_fibration);
                a["extra_per_singular_fiber"] =
                    swcalc::detail::int_to_json(b.extra_per_singular_fiber);
                a["extra_total"] = swcalc::detail::int_to_json(b.extra_total);
                a["total"] = swcalc::detail::int_to_json(b.total);
                a["extra_nonseparating"] = b.extra_nonseparating;
                j["audit"] = std::move(a);
            }
            if (out.format == "json")
                out.write(j.dump(2));
            else if (out.format == "csv")
                out.write(kv_csv(j));
            else {
                std::ostringstream os;
                for (const auto& [k, v] : j.items()) os << k << " = " << (v.is_structured() ? v.dump() : cell(v)) << "\n";
                out.write(os.str());
            }
        } else if (c_demo->parsed()) {
            return run_demo_command(section, out);
        }
    } catch (const CalcError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
