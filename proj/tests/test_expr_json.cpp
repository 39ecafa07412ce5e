#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "swcalc/expr.hpp"
#include "swcalc/json_io.hpp"

using namespace swcalc;
using nlohmann::json;

namespace {

json model(const std::string& name, json params = json::object()) {
    return json{{"op", "model"}, {"name", name}, {"params", std::move(params)}};
}

json zprime_tree(int n_base, int g) {
    return model("Zprime", json{{"x", model("E", {{"n", n_base + 1}})},
                                {"c", "SigmaH"},
                                {"g", g},
                                {"lengths", json::array({n_base - 1})},
                                {"complementary",
                                 json{{"holds", true},
                                      {"justification", "rim tori meet the dual fibration"}}}});
}

std::string dump_record(const FourManifold& m) { return manifold_to_json(m).dump(2); }

}  // namespace

TEST_CASE("expression trees evaluate to the builder records") {
    SECTION("model leaves") {
        CHECK(dump_record(eval_expr(model("E", {{"n", 2}}))) == dump_record(build_En(2)));
        CHECK(dump_record(eval_expr(model("K3"))) == dump_record(build_K3()));
        CHECK(dump_record(eval_expr(model("Y", {{"n", 3}, {"g", 2}}))) ==
              dump_record(build_Y(3, 2)));
        CHECK(dump_record(eval_expr(model("Yprime", {{"g", 2}, {"lengths", json::array({1, 2})}}))) ==
              dump_record(build_Yprime(2, {1, 2})));
        CHECK(dump_record(eval_expr(model("Horikawa", {{"m", 2}}))) ==
              dump_record(build_Horikawa(2)));
        CHECK(dump_record(eval_expr(model("Zmg", {{"m", 3}, {"g", 1}}))) ==
              dump_record(build_Zmg(3, 1)));
        CHECK(dump_record(eval_expr(model("Mng", {{"n", 2}, {"g", 1}}))) ==
              dump_record(build_Mng(2, 1)));
        CHECK(dump_record(eval_expr(model("S1xMK", {{"knot", "trefoil"}}))) ==
              dump_record(build_S1xMK(trefoil())));
        CHECK(dump_record(eval_expr(
                  model("Y3", {{"n", 2}, {"knot1", "trefoil"}, {"knot2", "figure8"}}))) ==
              dump_record(build_Y3(2, trefoil(), figure_eight())));
    }

    SECTION("knot surgery node") {
        json tree{{"op", "knot_surgery"},
                  {"child", model("E", {{"n", 2}})},
                  {"torus", "T"},
                  {"knot", "trefoil"}};
        FourManifold out = eval_expr(tree);
        const LaurentElem& v = sw_exact_value(out.sw);
        CHECK(v.coeff({Int(2), Int(0)}) == 1);
        CHECK(v.coeff({Int(0), Int(0)}) == -1);
        CHECK(v.coeff({Int(-2), Int(0)}) == 1);
        CHECK(v.term_count() == 3);

        json torus{{"op", "knot_surgery"},
                   {"child", model("E", {{"n", 3}})},
                   {"torus", "T"},
                   {"knot", json{{"p", 2}, {"q", 5}}}};
        CHECK(dump_record(eval_expr(torus)) == dump_record(knot_surgery(build_En(3), "T", torus_knot(2, 5))));
    }

    SECTION("fiber sum node") {
        json tree{{"op", "fiber_sum"},
                  {"left", model("K3")},
                  {"left_surface", "F"},
                  {"right", model("K3")},
                  {"right_surface", "F"}};
        FourManifold out = eval_expr(tree);
        CHECK(out.e == 48);
        CHECK(out.sign == -32);
    }

    SECTION("torus surgery node scales the top coefficient by m + 1") {
        json tree{{"op", "torus_surgery"},
                  {"child", zprime_tree(2, 2)},
                  {"multiplicities", json::array({2})}};
        FourManifold out = eval_expr(tree);
        const auto& mo = std::get<SWMaxOnly>(out.sw);
        Int top = 0;
        for (const auto& [e, c] : mo.terms.terms())
            if (c > top) top = c;
        CHECK(top == 3);
    }

    SECTION("composition matches direct calls") {
        json tree{{"op", "torus_surgery"},
                  {"child", json{{"op", "torus_surgery"},
                                 {"child", zprime_tree(2, 2)},
                                 {"multiplicities", json::array({1})}}},
                  {"multiplicities", json::array({2})}};
        FourManifold via_tree = eval_expr(tree);
        FourManifold direct = torus_surgery(
            build_Zprime(build_En(3), "SigmaH", 2, {1},
                         {true, "rim tori meet the dual fibration"}),
            {Int(1), Int(2)});
        CHECK(via_tree.e == direct.e);
        CHECK(via_tree.sign == direct.sign);
    }
}

TEST_CASE("expression errors carry the tree path") {
    auto message_of = [](const json& tree) {
        try {
            eval_expr(tree);
        } catch (const CalcError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };

    SECTION("structural errors") {
        CHECK(message_of(json{{"name", "E"}}).find("at $: missing field 'op'") == 0);
        CHECK(message_of(model("Klein")).find("at $: unknown model 'Klein'") == 0);
        CHECK(message_of(json{{"op", "warp"}}).find("at $: unknown op") == 0);
        CHECK(message_of(model("E", {{"n", "two"}})).find("at $.params") == 0);
    }

    SECTION("nested failures name the deep node") {
        json tree{{"op", "knot_surgery"},
                  {"child", json{{"op", "knot_surgery"},
                                 {"child", model("E", {{"n", 0}})},
                                 {"torus", "T"},
                                 {"knot", "trefoil"}}},
                  {"torus", "T"},
                  {"knot", "trefoil"}};
        std::string msg = message_of(tree);
        CHECK(msg.find("at $.child.child") == 0);
        CHECK(msg.find("build_En") != std::string::npos);

        json bad_knot{{"op", "knot_surgery"},
                      {"child", model("K3")},
                      {"torus", "F"},
                      {"knot", "granny"}};
        CHECK(message_of(bad_knot).find("at $.knot: unknown knot name") == 0);
    }

    SECTION("text entry point reports parse failures") {
        CHECK_THROWS_WITH(eval_expr_text("{\"op\": "),
                          Catch::Matchers::ContainsSubstring("does not parse"));
        FourManifold out = eval_expr_text("{\"op\": \"model\", \"name\": \"K3\"}");
        CHECK(out.e == 24);
    }
}

TEST_CASE("records round-trip through their canonical form") {
    std::vector<FourManifold> records;
    records.push_back(build_En(3));
    records.push_back(build_K3());
    records.push_back(build_Y(2, 2));
    records.push_back(build_Yprime(2, {1, 2}));
    records.push_back(build_Horikawa(2));
    records.push_back(build_Zmg(2, 1));
    records.push_back(build_Y3(2, trefoil(), figure_eight()));
    records.push_back(build_Mng(2, 1));
    records.push_back(build_S1xMK(torus_knot(2, 5)));
    records.push_back(knot_surgery(build_En(2), "T", trefoil()));
    records.push_back(torus_surgery(
        build_Zprime(build_En(3), "SigmaH", 2, {1}, {true, "rim tori"}), {Int(2)}));
    records.push_back(fiber_sum(build_K3(), "F", build_K3(), "F"));

    for (const auto& m : records) {
        INFO(m.name);
        Json j = manifold_to_json(m);
        std::string first = j.dump(2);
        FourManifold back = manifold_from_json(Json::parse(first));
        CHECK(manifold_to_json(back).dump(2) == first);
    }
}

TEST_CASE("canonical field order is stable") {
    Json j = manifold_to_json(build_En(2));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"name", "e", "sign", "b1", "parity", "spin",
                                           "symplectic", "simply_connected", "lattice", "sw",
                                           "canonical", "surfaces", "flags"});
}

TEST_CASE("oversized integers serialize as decimal strings") {
    LatticePtr lat = make_lattice({"u"}, {{Int(0)}});
    LaurentElem big(lat);
    Int huge("123456789012345678901234567890");
    big.add_term({Int(1)}, huge);
    big.add_term({Int(-1)}, -huge);
    Json j = laurent_to_json(big);
    CHECK(j["terms"][0]["coeff"].is_string());
    LaurentElem back = laurent_from_json(j, lat);
    CHECK(back == big);
    CHECK(laurent_to_json(back).dump() == j.dump());

    CHECK(detail::int_to_json(Int(7)).is_number_integer());
    CHECK(detail::int_from_json(Json("\"-12\""_json), "x") == -12);
}
