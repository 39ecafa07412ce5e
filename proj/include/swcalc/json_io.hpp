#pragma once

#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "manifold.hpp"

namespace swcalc {

using Json = nlohmann::ordered_json;

/**
 * Canonical JSON form of every record type. The layout is deterministic:
 * object keys appear in a fixed order, map-backed containers iterate sorted,
 * and integers render as JSON numbers while they fit in 64 bits and as
 * decimal strings beyond that. Serializing, parsing and serializing again is
 * byte-stable, which the golden tests rely on.
 */

namespace detail {

inline Json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return Json(v.convert_to<long long>());
    return Json(int_str(v));
}

inline Int int_from_json(const Json& j, const std::string& what) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw CalcError(what + ": expected an integer or a decimal string");
}

inline Json vec_to_json(const ClassVec& v) {
    Json a = Json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

inline ClassVec vec_from_json(const Json& j, const std::string& what) {
    if (!j.is_array()) throw CalcError(what + ": expected an array");
    ClassVec v;
    for (const auto& x : j) v.push_back(int_from_json(x, what));
    return v;
}

inline const Json& need(const Json& j, const char* key, const std::string& what) {
    auto it = j.find(key);
    if (it == j.end()) throw CalcError(what + ": missing field '" + key + "'");
    return *it;
}

}  // namespace detail

inline Json laurent_to_json(const LaurentElem& a) {
    Json terms = Json::array();
    for (const auto& [e, c] : a.terms()) {
        Json t;
        t["exp"] = detail::vec_to_json(e);
        t["coeff"] = detail::int_to_json(c);
        terms.push_back(std::move(t));
    }
    Json j;
    j["terms"] = std::move(terms);
    return j;
}

inline LaurentElem laurent_from_json(const Json& j, const LatticePtr& lat) {
    LaurentElem a(lat);
    const Json& terms = detail::need(j, "terms", "laurent");
    if (!terms.is_array()) throw CalcError("laurent: 'terms' must be an array");
    for (const auto& t : terms)
        a.add_term(detail::vec_from_json(detail::need(t, "exp", "laurent term"), "laurent exp"),
                   detail::int_from_json(detail::need(t, "coeff", "laurent term"), "laurent coeff"));
    return a;
}

inline Json lattice_to_json(const LatticePtr& lat) {
    Json j;
    j["labels"] = lat->basis();
    Json gram = Json::array();
    for (const auto& row : lat->gram()) gram.push_back(detail::vec_to_json(row));
    j["gram"] = std::move(gram);
    return j;
}

inline LatticePtr lattice_from_json(const Json& j) {
    std::vector<std::string> labels =
        detail::need(j, "labels", "lattice").get<std::vector<std::string>>();
    std::vector<std::vector<Int>> gram;
    for (const auto& row : detail::need(j, "gram", "lattice"))
        gram.push_back(detail::vec_from_json(row, "gram row"));
    return make_lattice(std::move(labels), std::move(gram));
}

inline Json sw_to_json(const SWValue& v) {
    Json j;
    if (const auto* e = std::get_if<SWExact>(&v)) {
        j["kind"] = "exact";
        j["value"] = laurent_to_json(e->value);
    } else if (const auto* m = std::get_if<SWMaxOnly>(&v)) {
        j["kind"] = "max_only";
        j["surface"] = detail::vec_to_json(m->surface);
        j["max_degree"] = detail::int_to_json(m->max_degree);
        j["terms"] = laurent_to_json(m->terms);
        j["note"] = m->note;
    } else if (const auto* c = std::get_if<SWWithConstant>(&v)) {
        j["kind"] = "with_constant";
        j["terms"] = laurent_to_json(c->terms);
        j["constant_name"] = c->constant_name;
    } else if (std::holds_alternative<SWZero>(v)) {
        j["kind"] = "zero";
    } else if (std::holds_alternative<SWUnknown>(v)) {
        j["kind"] = "unknown";
    } else {
        const auto& r = std::get<SWRational>(v);
        j["kind"] = "rational";
        j["numerator"] = laurent_to_json(r.numerator);
        j["num"] = detail::int_to_json(r.num);
        j["den"] = detail::int_to_json(r.den);
    }
    return j;
}

inline SWValue sw_from_json(const Json& j, const LatticePtr& lat) {
    std::string kind = detail::need(j, "kind", "sw").get<std::string>();
    if (kind == "zero") return SWZero{};
    if (kind == "unknown") return SWUnknown{};
    if (!lat) throw CalcError("sw: kind '" + kind + "' needs the record lattice");
    if (kind == "exact") return SWExact{laurent_from_json(detail::need(j, "value", "sw"), lat)};
    if (kind == "max_only") {
        SWMaxOnly m{detail::vec_from_json(detail::need(j, "surface", "sw"), "sw surface"),
                    detail::int_from_json(detail::need(j, "max_degree", "sw"), "sw max_degree"),
                    laurent_from_json(detail::need(j, "terms", "sw"), lat),
                    detail::need(j, "note", "sw").get<std::string>()};
        return m;
    }
    if (kind == "with_constant")
        return SWWithConstant{laurent_from_json(detail::need(j, "terms", "sw"), lat),
                              detail::need(j, "constant_name", "sw").get<std::string>()};
    if (kind == "rational")
        return SWRational{laurent_from_json(detail::need(j, "numerator", "sw"), lat),
                          detail::int_from_json(detail::need(j, "num", "sw"), "sw num"),
                          detail::int_from_json(detail::need(j, "den", "sw"), "sw den")};
    throw CalcError("sw: unknown kind '" + kind + "'");
}

inline Tri tri_from_str(const std::string& s, const std::string& what) {
    if (s == "yes") return Tri::yes;
    if (s == "no") return Tri::no;
    if (s == "unknown") return Tri::unknown;
    throw CalcError(what + ": expected yes/no/unknown, got '" + s + "'");
}

inline Parity parity_from_str(const std::string& s) {
    if (s == "even") return Parity::even;
    if (s == "odd") return Parity::odd;
    if (s == "unknown") return Parity::unknown;
    throw CalcError("parity: expected even/odd/unknown, got '" + s + "'");
}

inline Json surface_to_json(const TrackedSurface& s) {
    Json j;
    j["label"] = s.label;
    j["cls"] = detail::vec_to_json(s.cls);
    j["genus"] = detail::int_to_json(s.genus);
    j["self_int"] = detail::int_to_json(s.self_int);
    j["essential"] = s.essential;
    j["complement_pi1_trivial"] = s.complement_pi1_trivial;
    j["normally_generates_pi1"] = s.normally_generates_pi1;
    return j;
}

inline TrackedSurface surface_from_json(const Json& j) {
    TrackedSurface s;
    s.label = detail::need(j, "label", "surface").get<std::string>();
    s.cls = detail::vec_from_json(detail::need(j, "cls", "surface"), "surface cls");
    s.genus = detail::int_from_json(detail::need(j, "genus", "surface"), "surface genus");
    s.self_int = detail::int_from_json(detail::need(j, "self_int", "surface"), "surface self_int");
    s.essential = detail::need(j, "essential", "surface").get<bool>();
    s.complement_pi1_trivial =
        detail::need(j, "complement_pi1_trivial", "surface").get<bool>();
    s.normally_generates_pi1 =
        detail::need(j, "normally_generates_pi1", "surface").get<bool>();
    return s;
}

inline Json manifold_to_json(const FourManifold& m) {
    Json j;
    j["name"] = m.name;
    j["e"] = detail::int_to_json(m.e);
    j["sign"] = detail::int_to_json(m.sign);
    j["b1"] = m.b1 ? detail::int_to_json(*m.b1) : Json(nullptr);
    j["parity"] = parity_str(m.parity);
    j["spin"] = tri_str(m.spin);
    j["symplectic"] = tri_str(m.symplectic);
    j["simply_connected"] = tri_str(m.simply_connected);
    j["lattice"] = m.lattice ? lattice_to_json(m.lattice) : Json(nullptr);
    j["sw"] = sw_to_json(m.sw);
    j["canonical"] = m.canonical ? detail::vec_to_json(*m.canonical) : Json(nullptr);
    Json surfaces = Json::array();
    for (const auto& s : m.surfaces) surfaces.push_back(surface_to_json(s));
    j["surfaces"] = std::move(surfaces);
    j["flags"] = m.flags;
    return j;
}

inline FourManifold manifold_from_json(const Json& j) {
    FourManifold m;
    m.name = detail::need(j, "name", "manifold").get<std::string>();
    m.e = detail::int_from_json(detail::need(j, "e", "manifold"), "e");
    m.sign = detail::int_from_json(detail::need(j, "sign", "manifold"), "sign");
    const Json& b1 = detail::need(j, "b1", "manifold");
    if (!b1.is_null()) m.b1 = detail::int_from_json(b1, "b1");
    m.parity = parity_from_str(detail::need(j, "parity", "manifold").get<std::string>());
    m.spin = tri_from_str(detail::need(j, "spin", "manifold").get<std::string>(), "spin");
    m.symplectic =
        tri_from_str(detail::need(j, "symplectic", "manifold").get<std::string>(), "symplectic");
    m.simply_connected = tri_from_str(
        detail::need(j, "simply_connected", "manifold").get<std::string>(), "simply_connected");
    const Json& lat = detail::need(j, "lattice", "manifold");
    if (!lat.is_null()) m.lattice = lattice_from_json(lat);
    m.sw = sw_from_json(detail::need(j, "sw", "manifold"), m.lattice);
    const Json& kan = detail::need(j, "canonical", "manifold");
    if (!kan.is_null()) m.canonical = detail::vec_from_json(kan, "canonical");
    for (const auto& s : detail::need(j, "surfaces", "manifold")) m.surfaces.push_back(surface_from_json(s));
    for (const auto& [k, v] : detail::need(j, "flags", "manifold").items())
        m.flags[k] = v.get<std::string>();
    return m;
}

}  // namespace swcalc
