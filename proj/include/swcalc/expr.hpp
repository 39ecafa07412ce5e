#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "constructions.hpp"
#include "lefschetz.hpp"

namespace swcalc {

/**
 * JSON expression trees over the construction operations. A node is an
 * object with an "op" field:
 *
 *   {"op": "model", "name": ..., "params": {...}}
 *   {"op": "knot_surgery", "child": node, "torus": label, "knot": knot}
 *   {"op": "fiber_sum", "left": node, "left_surface": label,
 *                       "right": node, "right_surface": label,
 *                       "complementary": {"holds": bool, "justification": str}?}
 *   {"op": "torus_surgery", "child": node, "multiplicities": [ints]}
 *
 * Knots are either a name ("unknot", "trefoil", "figure8") or an object
 * {"p": int, "q": int} naming a torus knot. Model parameters that are
 * themselves manifolds (the glued families take a base manifold) hold a
 * nested expression node. Evaluation errors carry the JSON-pointer-style
 * path of the failing node.
 */

namespace detail {

[[noreturn]] inline void expr_fail(const std::string& path, const std::string& what) {
    throw CalcError("at " + path + ": " + what);
}

inline const nlohmann::json& expr_field(const nlohmann::json& j, const char* key,
                                        const std::string& path) {
    if (!j.is_object()) expr_fail(path, "expected an object node");
    auto it = j.find(key);
    if (it == j.end()) expr_fail(path, std::string("missing field '") + key + "'");
    return *it;
}

inline int expr_int(const nlohmann::json& j, const char* key, const std::string& path) {
    const auto& f = expr_field(j, key, path);
    if (!f.is_number_integer()) expr_fail(path, std::string("field '") + key + "' must be an integer");
    return f.get<int>();
}

inline std::string expr_str(const nlohmann::json& j, const char* key, const std::string& path) {
    const auto& f = expr_field(j, key, path);
    if (!f.is_string()) expr_fail(path, std::string("field '") + key + "' must be a string");
    return f.get<std::string>();
}

inline std::vector<int> expr_int_list(const nlohmann::json& j, const char* key,
                                      const std::string& path) {
    const auto& f = expr_field(j, key, path);
    if (!f.is_array()) expr_fail(path, std::string("field '") + key + "' must be an array");
    std::vector<int> v;
    for (const auto& x : f) {
        if (!x.is_number_integer())
            expr_fail(path, std::string("field '") + key + "' must hold integers");
        v.push_back(x.get<int>());
    }
    return v;
}

inline FiberedKnot parse_knot(const nlohmann::json& j, const std::string& path) {
    if (j.is_string()) {
        std::string name = j.get<std::string>();
        if (name == "unknot") return unknot();
        if (name == "trefoil") return trefoil();
        if (name == "figure8") return figure_eight();
        expr_fail(path, "unknown knot name '" + name + "' (use unknot, trefoil, figure8, or {p, q})");
    }
    if (j.is_object() && j.contains("p") && j.contains("q"))
        return torus_knot(expr_int(j, "p", path), expr_int(j, "q", path));
    expr_fail(path, "a knot is a name or an object {p, q}");
}

inline ComplementarityHypothesis parse_comp(const nlohmann::json& j, const std::string& path) {
    ComplementarityHypothesis c;
    if (!j.is_object()) expr_fail(path, "'complementary' must be an object {holds, justification}");
    c.holds = expr_field(j, "holds", path).get<bool>();
    if (j.contains("justification")) c.justification = expr_str(j, "justification", path);
    return c;
}

inline FourManifold eval_node(const nlohmann::json& j, const std::string& path);

inline FourManifold eval_model(const nlohmann::json& j, const std::string& path) {
    std::string name = expr_str(j, "name", path);
    nlohmann::json params = j.contains("params") ? j.at("params") : nlohmann::json::object();
    auto p_int = [&](const char* key) { return expr_int(params, key, path + ".params"); };
    if (name == "E") return build_En(p_int("n"));
    if (name == "K3") return build_K3();
    if (name == "Y") return build_Y(p_int("n"), p_int("g"));
    if (name == "Yprime")
        return build_Yprime(p_int("g"), expr_int_list(params, "lengths", path + ".params"));
    if (name == "Horikawa") return build_Horikawa(p_int("m"));
    if (name == "Zmg") return build_Zmg(p_int("m"), p_int("g"));
    if (name == "Mng") return build_Mng(p_int("n"), p_int("g"));
    if (name == "S1xMK")
        return build_S1xMK(parse_knot(expr_field(params, "knot", path + ".params"),
                                      path + ".params.knot"));
    if (name == "Y3")
        return build_Y3(p_int("n"),
                        parse_knot(expr_field(params, "knot1", path + ".params"),
                                   path + ".params.knot1"),
                        parse_knot(expr_field(params, "knot2", path + ".params"),
                                   path + ".params.knot2"));
    if (name == "Z")
        return build_Z(eval_node(expr_field(params, "x", path + ".params"), path + ".params.x"),
                       expr_str(params, "c", path + ".params"), p_int("g"));
    if (name == "Zprime")
        return build_Zprime(
            eval_node(expr_field(params, "x", path + ".params"), path + ".params.x"),
            expr_str(params, "c", path + ".params"), p_int("g"),
            expr_int_list(params, "lengths", path + ".params"),
            parse_comp(expr_field(params, "complementary", path + ".params"),
                       path + ".params.complementary"));
    expr_fail(path, "unknown model '" + name +
                        "' (known: E, K3, Y, Yprime, Horikawa, Zmg, Mng, S1xMK, Y3, Z, Zprime)");
}

inline FourManifold eval_node(const nlohmann::json& j, const std::string& path) {
    try {
        std::string op = expr_str(j, "op", path);
        if (op == "model") return eval_model(j, path);
        if (op == "knot_surgery")
            return knot_surgery(eval_node(expr_field(j, "child", path), path + ".child"),
                                expr_str(j, "torus", path),
                                parse_knot(expr_field(j, "knot", path), path + ".knot"));
        if (op == "fiber_sum") {
            ComplementarityHypothesis comp;
            if (j.contains("complementary"))
                comp = parse_comp(j.at("complementary"), path + ".complementary");
            return fiber_sum(eval_node(expr_field(j, "left", path), path + ".left"),
                             expr_str(j, "left_surface", path),
                             eval_node(expr_field(j, "right", path), path + ".right"),
                             expr_str(j, "right_surface", path), comp);
        }
        if (op == "torus_surgery") {
            std::vector<Int> ms;
            for (int m : expr_int_list(j, "multiplicities", path)) ms.push_back(m);
            return torus_surgery(eval_node(expr_field(j, "child", path), path + ".child"), ms);
        }
        expr_fail(path, "unknown op '" + op +
                            "' (known: model, knot_surgery, fiber_sum, torus_surgery)");
    } catch (const CalcError& e) {
        std::string msg = e.what();
        if (msg.rfind("at $", 0) == 0) throw;  // already annotated deeper in the tree
        expr_fail(path, msg);
    }
}

}  // namespace detail

inline FourManifold eval_expr(const nlohmann::json& x) { return detail::eval_node(x, "$"); }

/** Parse a JSON document and evaluate it; parse errors keep their location. */
inline FourManifold eval_expr_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw CalcError(std::string("expression does not parse: ") + e.what());
    }
    return eval_expr(doc);
}

}  // namespace swcalc
