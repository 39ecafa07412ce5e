#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "swcalc/basic_classes.hpp"
#include "swcalc/constructions.hpp"

using namespace swcalc;

namespace {

// Independent check: scan every integer vector of the equality-solved
// sublattice with coordinates bounded by twice the largest adjunction bound
// and keep the ones satisfying all constraints and the square condition.
std::vector<ClassVec> oracle_scan(const AdjunctionScenario& s) {
    const LatticePtr& lat = s.lattice;
    IntMatrix eq;
    std::vector<std::pair<ClassVec, Int>> ineq;  // (surface class, bound)
    Int maxbound = 1;
    for (const auto& sur : s.surfaces) {
        if (sur.genus < 1 || sur.self_int < 0 || !sur.essential) continue;
        Int b = 2 * sur.genus - 2 - sur.self_int;
        REQUIRE(b >= 0);
        if (b == 0)
            eq.push_back(detail::pairing_row(lat, sur.cls));
        else {
            ineq.emplace_back(sur.cls, b);
            maxbound = std::max(maxbound, b);
        }
    }
    std::vector<ClassVec> basis;
    if (eq.empty()) {
        for (int i = 0; i < lat->rank(); ++i) basis.push_back(lat->unit(i));
    } else {
        basis = integer_kernel(eq);
    }
    Int want = 2 * s.e + 3 * s.sign;
    std::vector<ClassVec> found;
    std::vector<Int> y(basis.size(), Int(0));
    Int radius = 2 * maxbound;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == basis.size()) {
            ClassVec k(lat->rank(), Int(0));
            for (size_t j = 0; j < basis.size(); ++j)
                for (int c = 0; c < lat->rank(); ++c) k[c] += y[j] * basis[j][c];
            for (const auto& [cls, b] : ineq)
                if (abs_int(lat->pair(k, cls)) > b) return;
            if (lat->square(k) == want) found.push_back(k);
            return;
        }
        for (Int v = -radius; v <= radius; ++v) {
            y[i] = v;
            rec(i + 1);
        }
    };
    if (!basis.empty()) rec(0);
    std::sort(found.begin(), found.end());
    return found;
}

ClassVec two_coord(const LatticePtr& lat, const Int& a, const Int& b) {
    ClassVec k(lat->rank(), Int(0));
    k[0] = a;
    k[1] = b;
    return k;
}

}  // namespace

TEST_CASE("chain scenario candidates") {
    SECTION("two-piece scenarios carry exactly the conjugate pair") {
        for (int g = 2; g <= 6; ++g) {
            AdjunctionScenario s = scenario_Y2g(g);
            CandidateResult r = enumerate_candidates(s);
            REQUIRE_FALSE(r.vanishes);
            std::vector<ClassVec> expect{two_coord(s.lattice, Int(2 - 2 * g), Int(-2)),
                                         two_coord(s.lattice, Int(2 * g - 2), Int(2))};
            std::sort(expect.begin(), expect.end());
            CHECK(r.classes == expect);
        }
    }

    SECTION("genus-1 fiber leaves the five small fiber multiples") {
        AdjunctionScenario s = scenario_Y2g(1);
        CandidateResult r = enumerate_candidates(s);
        REQUIRE_FALSE(r.vanishes);
        std::vector<ClassVec> expect;
        for (int t = -2; t <= 2; ++t) expect.push_back(two_coord(s.lattice, Int(0), Int(t)));
        std::sort(expect.begin(), expect.end());
        CHECK(r.classes == expect);
    }

    SECTION("longer chains pin (2g-2) tau + (2n-2) Sigma") {
        for (int n = 2; n <= 4; ++n) {
            for (int g = 2; g <= 4; ++g) {
                AdjunctionScenario s = scenario_Yng(n, g);
                CandidateResult r = enumerate_candidates(s);
                REQUIRE(r.classes.size() == 2);
                CHECK(r.classes[1] == two_coord(s.lattice, Int(2 * g - 2), Int(2 * n - 2)));
                CHECK(r.classes[0] == vec_neg(r.classes[1]));
            }
        }
    }

    SECTION("scenario Gram data") {
        AdjunctionScenario s = scenario_Y2g(3);
        CHECK(s.lattice->pair(s.lattice->unit(0), s.lattice->unit(1)) == 1);
        int vbase = 2 + 2 * 3;  // junction rim classes come first
        CHECK(s.lattice->square(s.lattice->unit(vbase)) == 2);
        CHECK(s.e == 8);
        IntMatrix block(12, ClassVec(12, Int(0)));
        for (int a = 0; a < 12; ++a)
            for (int b = 0; b < 12; ++b) block[a][b] = s.lattice->gram()[2 + a][2 + b];
        CHECK(integer_det(block) == 1);
    }
}

TEST_CASE("surgered parallel-fiber scenario has no basic classes") {
    std::vector<std::vector<int>> lists{{1}, {2}, {3}, {1, 1}, {1, 2}, {2, 2}, {2, 3}};
    for (int g = 1; g <= 4; ++g) {
        for (const auto& lens : lists) {
            CandidateResult r = enumerate_candidates(scenario_Yprime_neg1(g, lens));
            if (g == 1) {
                CHECK(r.vanishes);
                CHECK(r.reason.find("essential sphere") != std::string::npos);
            } else {
                CHECK_FALSE(r.vanishes);
                CHECK(r.classes.empty());
            }
        }
    }
}

TEST_CASE("enumeration agrees with the brute-force oracle") {
    for (int g = 1; g <= 5; ++g) {
        AdjunctionScenario s = scenario_Y2g(g);
        CHECK(enumerate_candidates(s).classes == oracle_scan(s));
    }
    for (int n = 3; n <= 4; ++n) {
        AdjunctionScenario s = scenario_Yng(n, 3);
        CHECK(enumerate_candidates(s).classes == oracle_scan(s));
    }
    for (int g = 2; g <= 5; ++g) {
        for (const auto& lens :
             std::vector<std::vector<int>>{{1}, {3}, {1, 2}, {1, 1, 1}, {2, 3, 1}}) {
            AdjunctionScenario s = scenario_Yprime_neg1(g, lens);
            CHECK(enumerate_candidates(s).classes == oracle_scan(s));
        }
    }
}

TEST_CASE("unused Gram entries between vanishing classes do not matter") {
    AdjunctionScenario s = scenario_Y2g(3);
    std::vector<std::vector<Int>> gram = s.lattice->gram();
    int vbase = 2 + 2 * 3;
    gram[vbase][vbase + 1] = 1;  // perturb V_1 . V_2
    gram[vbase + 1][vbase] = 1;
    AdjunctionScenario t = s;
    t.lattice = make_lattice(s.lattice->basis(), gram);
    for (auto& sur : t.surfaces) sur.cls = sur.cls;  // classes keep their coordinates
    CandidateResult a = enumerate_candidates(s);
    CandidateResult b = enumerate_candidates(t);
    CHECK(a.classes == b.classes);
}

TEST_CASE("scenario output matches the chain-piece builder") {
    for (int g = 1; g <= 6; ++g) {
        FourManifold y = build_Y(2, g);
        CandidateResult r = enumerate_candidates(scenario_Y2g(g));
        REQUIRE_FALSE(r.vanishes);
        // The builder's canonical class, read in the scenario coordinates
        // (first two basis members agree), must be among the candidates, and
        // for g >= 2 must be the unique positive one.
        ClassVec kan(r.classes[0].size(), Int(0));
        kan[0] = (*y.canonical)[0];
        kan[1] = (*y.canonical)[1];
        CHECK(std::find(r.classes.begin(), r.classes.end(), kan) != r.classes.end());
        if (g >= 2) {
            CHECK(r.classes.size() == 2);
            CHECK(r.classes[1] == kan);
        }
    }
}

TEST_CASE("degenerate and rejected scenarios") {
    SECTION("an essential sphere of non-negative square forces vanishing") {
        AdjunctionScenario s;
        s.name = "sphere";
        s.lattice = make_lattice({"S"}, {{Int(0)}});
        s.surfaces.push_back({"S", s.lattice->unit(0), Int(0), Int(0), true, false, false});
        CandidateResult r = enumerate_candidates(s);
        CHECK(r.vanishes);
    }

    SECTION("an inessential sphere only warns") {
        AdjunctionScenario s;
        s.name = "null sphere";
        s.lattice = make_lattice({"V"}, {{Int(2)}});
        s.surfaces.push_back({"S", ClassVec{Int(0)}, Int(0), Int(0), false, false, false});
        s.surfaces.push_back({"V", s.lattice->unit(0), Int(2), Int(2), true, false, false});
        CandidateResult r = enumerate_candidates(s);
        CHECK_FALSE(r.vanishes);
        REQUIRE_FALSE(r.warnings.empty());
    }

    SECTION("a surface violating adjunction for every class forces vanishing") {
        AdjunctionScenario s;
        s.name = "fat torus";
        s.lattice = make_lattice({"T"}, {{Int(4)}});
        s.surfaces.push_back({"T", s.lattice->unit(0), Int(1), Int(4), true, false, false});
        CandidateResult r = enumerate_candidates(s);
        CHECK(r.vanishes);
    }

    SECTION("negative-square surfaces are skipped with a warning") {
        AdjunctionScenario s;
        s.name = "exceptional";
        s.lattice = make_lattice({"E", "T"}, {{Int(-1), Int(0)}, {Int(0), Int(0)}});
        s.surfaces.push_back({"E", s.lattice->unit(0), Int(1), Int(-1), true, false, false});
        s.surfaces.push_back({"T", s.lattice->unit(1), Int(1), Int(0), true, false, false});
        CHECK_THROWS_AS(enumerate_candidates(s), CalcError);  // region still unbounded
        s.surfaces.push_back({"T2", {Int(1), Int(1)}, Int(2), Int(-1), true, false, false});
        CHECK_THROWS_AS(enumerate_candidates(s), CalcError);
    }

    SECTION("underconstrained scenarios are refused, not truncated") {
        AdjunctionScenario s;
        s.name = "half constrained";
        s.lattice = make_lattice({"A", "B"}, {{Int(0), Int(1)}, {Int(1), Int(0)}});
        s.surfaces.push_back({"B", s.lattice->unit(1), Int(2), Int(0), true, false, false});
        try {
            enumerate_candidates(s);
            FAIL("expected an unbounded-region error");
        } catch (const CalcError& err) {
            CHECK(std::string(err.what()).find("unbounded") != std::string::npos);
        }
    }

    SECTION("equalities can pin the zero class alone") {
        AdjunctionScenario s;
        s.name = "rigid";
        s.lattice = make_lattice({"V"}, {{Int(2)}});
        s.surfaces.push_back({"V", s.lattice->unit(0), Int(2), Int(2), true, false, false});
        CandidateResult r = enumerate_candidates(s);
        REQUIRE(r.classes.size() == 1);
        CHECK(r.classes[0] == ClassVec{Int(0)});
        s.e = 1;
        CHECK(enumerate_candidates(s).classes.empty());
    }

    SECTION("candidates always satisfy the square condition and negation symmetry") {
        AdjunctionScenario s = scenario_Yng(3, 2);
        CandidateResult r = enumerate_candidates(s);
        for (const auto& k : r.classes) {
            CHECK(s.lattice->square(k) == 2 * s.e + 3 * s.sign);
            CHECK(std::find(r.classes.begin(), r.classes.end(), vec_neg(k)) != r.classes.end());
        }
    }
}
