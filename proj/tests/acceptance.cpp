// End-to-end acceptance gate: one line per headline claim of the engine,
// PASS/FAIL, nonzero exit if anything fails. Everything here is exact
// integer arithmetic; there are no tolerances anywhere.

#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "swcalc/demos.hpp"
#include "oracle_alexander.hpp"

using namespace swcalc;

namespace {

int g_failures = 0;

void criterion(const char* id, const char* what, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("threw: ") + e.what();
    }
    std::cout << "[" << id << "] " << (ok ? "PASS" : "FAIL") << "  " << what << "\n";
    if (!ok) {
        if (!detail.empty()) std::cout << "       " << detail << "\n";
        ++g_failures;
    }
}

std::string classes_str(const std::vector<ClassVec>& classes) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < classes.size(); ++i) os << (i ? ", " : "") << vec_str(classes[i]);
    os << "}";
    return os.str();
}

std::string set_str(const std::set<int>& s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int v : s) {
        os << (first ? "" : ",") << v;
        first = false;
    }
    os << "}";
    return os.str();
}

// -- c01: candidate enumeration on the doubled chain piece -------------------

bool check_candidates(std::string& detail) {
    for (int g = 2; g <= 6; ++g) {
        CandidateResult r = enumerate_candidates(scenario_Y2g(g));
        ClassVec beta(2 + 4 * g, Int(0));
        beta[0] = 2 * g - 2;
        beta[1] = 2;
        std::vector<ClassVec> want{vec_neg(beta), beta};
        if (r.vanishes || r.classes != want) {
            detail = "g = " + std::to_string(g) + ": got " + classes_str(r.classes);
            return false;
        }
    }
    CandidateResult r1 = enumerate_candidates(scenario_Y2g(1));
    std::vector<ClassVec> want1;
    for (int s = -2; s <= 2; ++s) {
        ClassVec v(6, Int(0));
        v[1] = s;
        want1.push_back(v);
    }
    if (r1.vanishes || r1.classes != want1) {
        detail = "g = 1: got " + classes_str(r1.classes);
        return false;
    }
    return true;
}

// -- c02: chain-piece invariant is the signed conjugate pair -----------------

bool check_chain_invariant(std::string& detail) {
    for (int n = 2; n <= 4; ++n) {
        for (int g = 2; g <= 4; ++g) {
            FourManifold y = build_Y(n, g);
            ClassVec beta(y.lattice->rank(), Int(0));
            beta[0] = 2 * g - 2;
            beta[1] = 2 * n - 2;
            if (!y.canonical || *y.canonical != beta) {
                detail = y.name + ": top class is not (2g-2, 2n-2)";
                return false;
            }
            LaurentElem want(y.lattice);
            want.add_term(beta, 1);
            want.add_term(vec_neg(beta), ((g - 1) * (n - 1)) % 2 == 0 ? 1 : -1);
            if (!sw_is_exact(y.sw) || !(sw_exact_value(y.sw) == want)) {
                detail = y.name + ": invariant is " + sw_str(y.sw);
                return false;
            }
        }
    }
    return true;
}

// -- c03: spin family characteristic numbers ---------------------------------

bool check_family_chars(std::string& detail) {
    for (int m = 1; m <= 8; ++m) {
        for (int g = 1; g <= 8; ++g) {
            FourManifold z = build_Zmg(m, g);
            Int chi = quarter_characteristic(z);
            Int c1 = c1_squared(z);
            if (chi != Int(8) * m + g - 1 || c1 != Int(16) * m + 8 * g - 8) {
                detail = z.name + ": (chi, c1^2) = (" + int_str(chi) + ", " + int_str(c1) + ")";
                return false;
            }
            if (chi != zmg_chi(m, g) || c1 != zmg_c1sq(m, g)) {
                detail = z.name + ": closed forms disagree with the built record";
                return false;
            }
        }
    }
    return true;
}

// -- c04: restricted-genus tables ---------------------------------------------

bool check_genus_tables(std::string& detail) {
    const std::map<int, std::set<int>> want{{1, {}},     {2, {}},        {3, {1}},
                                            {4, {1, 2, 4}}, {5, {2, 3, 5}}, {6, {1, 3, 4, 6, 7}}};
    for (const auto& [m, expect] : want) {
        std::set<int> got;
        for (int g = 1; g <= 10; ++g)
            if (zmg_restricted(m, g)) got.insert(g);
        if (got != expect) {
            detail = "m = " + std::to_string(m) + ": got " + set_str(got) + ", want " +
                     set_str(expect);
            return false;
        }
    }
    // the m = 5 table must be advertised as a known departure from the
    // published list, with the computed {2,3,5} shown against it
    for (const DemoLine& l : demo_geography().lines)
        if (l.label.find("documented discrepancy") != std::string::npos)
            return l.pass && l.expected == "{2,3,5}";
    detail = "demo does not flag the m = 5 table";
    return false;
}

// -- c05: surgery multipliers --------------------------------------------------

bool check_surgery_multiplier(std::string& detail) {
    // a multiplicity -1 surgery kills the invariant, so the core-piece
    // superposition is minus the unsurgered value and multiplicity m scales
    // the invariant by m + 1
    LaurentElem v = sw_exact_value(build_Y(2, 2).sw);
    for (int m = 0; m <= 6; ++m) {
        SWValue r = surgery_formula(SWExact{v}, -v, Int(m));
        if (!sw_is_exact(r) || !(sw_exact_value(r) == Int(m + 1) * v)) {
            detail = "single surgery at m = " + std::to_string(m) + " is not (m+1) * base";
            return false;
        }
    }

    FourManifold zp =
        build_Zprime(build_En(3), "SigmaH", 2, {1}, {true, "rim tori meet the dual fibration"});
    LaurentElem base = std::get<SWMaxOnly>(zp.sw).terms;
    for (int len = 1; len <= 4; ++len) {
        int total = 1;
        for (int i = 0; i < len; ++i) total *= 4;
        for (int code = 0; code < total; ++code) {
            std::vector<Int> ms;
            Int factor = 1;
            int c = code;
            for (int i = 0; i < len; ++i) {
                int digit = c % 4;
                c /= 4;
                ms.push_back(Int(digit));
                factor *= digit + 1;
            }
            FourManifold out = torus_surgery(zp, ms);
            const auto* mo = std::get_if<SWMaxOnly>(&out.sw);
            if (!mo || !(mo->terms == factor * base)) {
                std::ostringstream os;
                os << "vector (";
                for (size_t i = 0; i < ms.size(); ++i) os << (i ? "," : "") << ms[i];
                os << ") does not scale by " << factor;
                detail = os.str();
                return false;
            }
        }
    }
    return true;
}

// -- c06: symplectic obstruction after surgery ---------------------------------

bool check_symplectic_verdicts(std::string& detail) {
    FourManifold zp =
        build_Zprime(build_En(3), "SigmaH", 2, {1}, {true, "rim tori meet the dual fibration"});
    const std::vector<std::pair<std::vector<Int>, TaubesResult>> cases{
        {{Int(0)}, TaubesResult::consistent},
        {{Int(0), Int(0)}, TaubesResult::consistent},
        {{Int(0), Int(0), Int(0), Int(0)}, TaubesResult::consistent},
        {{Int(1)}, TaubesResult::obstructed},
        {{Int(3)}, TaubesResult::obstructed},
        {{Int(0), Int(1)}, TaubesResult::obstructed},
        {{Int(2), Int(0), Int(1)}, TaubesResult::obstructed},
        {{Int(1), Int(1), Int(1), Int(1)}, TaubesResult::obstructed}};
    for (const auto& [ms, expect] : cases) {
        TaubesVerdict v = taubes_symplectic_check(torus_surgery(zp, ms));
        if (v.result != expect) {
            detail = "surgery vector of size " + std::to_string(ms.size()) + ": " +
                     taubes_str(v.result) + " (" + v.reason + ")";
            return false;
        }
    }
    return true;
}

// -- c07: surgered auxiliary piece has no basic classes ------------------------

bool check_vanishing_scenario(std::string& detail) {
    const std::vector<std::vector<int>> length_sets{{1}, {2}, {3}, {1, 1}, {1, 2}, {2, 2}};
    for (int g = 1; g <= 4; ++g) {
        for (const auto& lengths : length_sets) {
            CandidateResult r = enumerate_candidates(scenario_Yprime_neg1(g, lengths));
            if (!r.vanishes && !r.classes.empty()) {
                detail = "g = " + std::to_string(g) + ", " +
                         std::to_string(lengths.size()) + " chains: got " +
                         classes_str(r.classes);
                return false;
            }
        }
    }
    return true;
}

// -- c08: homeomorphism verdicts ------------------------------------------------

bool check_homeomorphism(std::string& detail) {
    for (int n = 2; n <= 4; ++n) {
        for (int g = 1; g <= 3; ++g) {
            FourManifold x = build_En(n + 1);
            FourManifold z = build_Z(x, "SigmaH", g);
            FourManifold zp = build_Zprime(x, "SigmaH", g, {n - 1},
                                           {true, "rim tori meet the dual fibration"});
            HomeoVerdict v = homeo_compare(z, zp);
            if (v.result != HomeoResult::homeomorphic) {
                detail = z.name + " vs " + zp.name + ": " + homeo_str(v.result);
                return false;
            }
        }
    }
    FourManifold zp =
        build_Zprime(build_En(3), "SigmaH", 2, {1}, {true, "rim tori meet the dual fibration"});
    for (int m = 0; m <= 6; ++m) {
        HomeoVerdict v = homeo_compare(torus_surgery(zp, {Int(m)}), zp);
        if (v.result != HomeoResult::homeomorphic) {
            detail = "surgery multiplicity " + std::to_string(m) + ": " + homeo_str(v.result);
            return false;
        }
    }
    HomeoVerdict multi = homeo_compare(torus_surgery(zp, {Int(1), Int(2), Int(3)}), zp);
    if (multi.result != HomeoResult::homeomorphic) {
        detail = "triple surgery: " + homeo_str(multi.result);
        return false;
    }
    return true;
}

// -- c09: fibration euler counts ------------------------------------------------

bool check_fibration_counts(std::string& detail) {
    for (int n = 1; n <= 10; ++n) {
        for (int g = 1; g <= 10; ++g) {
            Int e = euler_from_fibration(Int(2) * g + n - 1, Int(16) * n + 8 * g - 8);
            if (e != Int(12) * n) {
                detail = "n = " + std::to_string(n) + ", g = " + std::to_string(g) +
                         ": e = " + int_str(e);
                return false;
            }
            Fibration f = enk_fibration(n, g);
            if (n >= 2 && (!f.reducible_fibers || *f.reducible_fibers != 0)) {
                detail = "n = " + std::to_string(n) + ": reducible count not pinned to 0";
                return false;
            }
        }
    }
    for (int n = 2; n <= 10; ++n) {
        for (int g = 0; g <= 10; ++g) {
            VanishingCycleBreakdown b = vanishing_cycle_audit(n, g);
            bool ok = b.from_base_fibration == Int(16) * n - 8 && b.extra_total == Int(8) * g &&
                      b.total == Int(16) * n + 8 * g - 8 && b.extra_nonseparating;
            if (!ok) {
                detail = "audit at n = " + std::to_string(n) + ", g = " + std::to_string(g) +
                         ": " + int_str(b.from_base_fibration) + " + " + int_str(b.extra_total) +
                         " != " + int_str(b.total);
                return false;
            }
        }
    }
    return true;
}

// -- c10: twisted doubles ---------------------------------------------------------

bool check_twisted_doubles(std::string& detail) {
    for (int n = 1; n <= 8; ++n) {
        for (int g = 1; g <= 8; ++g) {
            TwistedSumReport r = twisted_fiber_sum_check(n, g);
            bool ok = r.matches && r.expected_e == Int(12) * n &&
                      r.expected_sign == Int(-8) * n && r.sum.e == build_En(n).e &&
                      r.sum.sign == build_En(n).sign;
            if (!ok) {
                detail = "n = " + std::to_string(n) + ", g = " + std::to_string(g) + ": (" +
                         int_str(r.sum.e) + ", " + int_str(r.sum.sign) + ")";
                return false;
            }
        }
    }
    return true;
}

// -- c11: doubled elliptic surfaces ----------------------------------------------

bool check_doubled_surfaces(std::string& detail) {
    for (int n = 1; n <= 4; ++n) {
        for (int g = 1; g <= 4; ++g) {
            FourManifold y = build_Y3(n, torus_knot(2, 2 * g + 1), torus_knot(2, 2 * g + 1));
            Int c1 = c1_squared(y);
            if (c1 != Int(16) * g + 8 * n - 16) {
                detail = y.name + ": c1^2 = " + int_str(c1);
                return false;
            }
            if (!y.canonical || y.lattice->square(*y.canonical) != c1) {
                detail = y.name + ": canonical square differs from c1^2";
                return false;
            }
            LaurentElem want(y.lattice);
            want.add_term(*y.canonical, 1);
            want.add_term(vec_neg(*y.canonical), n % 2 == 0 ? 1 : -1);
            if (!sw_is_exact(y.sw) || !(sw_exact_value(y.sw) == want)) {
                detail = y.name + ": invariant is " + sw_str(y.sw);
                return false;
            }
        }
    }
    // two distinct torus knots of one genus feed through to one invariant
    const std::vector<std::tuple<int, std::pair<int, int>, std::pair<int, int>>> pairs{
        {2, {2, 7}, {3, 4}}, {3, {2, 9}, {3, 5}}};
    for (const auto& [n, ka, kb] : pairs) {
        FourManifold a = build_Y3(n, torus_knot(ka.first, ka.second),
                                  torus_knot(ka.first, ka.second));
        FourManifold b = build_Y3(n, torus_knot(kb.first, kb.second),
                                  torus_knot(kb.first, kb.second));
        if (!(sw_exact_value(a.sw) == sw_exact_value(b.sw)) || *a.canonical != *b.canonical) {
            detail = a.name + " vs " + b.name + ": invariants differ";
            return false;
        }
    }
    return true;
}

// -- c12: algebra oracles ----------------------------------------------------------

std::map<long, Int> exponent_map(const LaurentElem& v) {
    std::map<long, Int> m;
    for (const auto& [e, c] : v.terms()) m[e[0].convert_to<long>()] = c;
    return m;
}

bool conjugation_symmetric(const FourManifold& m, std::string& detail) {
    const LaurentElem* v = nullptr;
    if (const auto* e = std::get_if<SWExact>(&m.sw))
        v = &e->value;
    else if (const auto* w = std::get_if<SWWithConstant>(&m.sw))
        v = &w->terms;
    else if (const auto* mo = std::get_if<SWMaxOnly>(&m.sw))
        v = &mo->terms;
    else if (const auto* r = std::get_if<SWRational>(&m.sw)) {
        if (!(laurent_bar(r->numerator) == r->numerator)) {
            detail = m.name + ": fibered-piece numerator is not symmetric";
            return false;
        }
        return true;
    } else {
        return true;  // zero and unknown have nothing to check
    }
    LaurentElem bar = laurent_bar(*v);
    if (!(bar == *v || bar == -*v)) {
        detail = m.name + ": invariant is not conjugation (anti)symmetric";
        return false;
    }
    if (!v->is_zero() && (m.e + m.sign) % 4 == 0) {
        const LaurentElem want = conjugation_sign(m) > 0 ? *v : -*v;
        if (!(bar == want)) {
            detail = m.name + ": conjugation sign disagrees with (-1)^((e+sign)/4)";
            return false;
        }
    }
    return true;
}

bool check_algebra_oracles(std::string& detail) {
    for (int p = 2; p * (p + 1) <= 35; ++p) {
        for (int q = p + 1; p * q <= 35; ++q) {
            if (std::gcd(p, q) != 1) continue;
            if (exponent_map(alexander_torus_knot(p, q)) != oracle::alexander_oracle(p, q)) {
                detail = "torus knot (" + std::to_string(p) + "," + std::to_string(q) +
                         ") disagrees with the Seifert-matrix oracle";
                return false;
            }
            if (!(alexander_torus_knot(-p, q) == alexander_torus_knot(p, q))) {
                detail = "mirror of (" + std::to_string(p) + "," + std::to_string(q) +
                         ") changed the polynomial";
                return false;
            }
        }
    }

    std::vector<FourManifold> records;
    for (int n = 1; n <= 6; ++n) records.push_back(build_En(n));
    records.push_back(build_K3());
    for (int m = 1; m <= 4; ++m) records.push_back(build_Horikawa(m));
    for (int n = 2; n <= 4; ++n)
        for (int g = 1; g <= 4; ++g) records.push_back(build_Y(n, g));
    for (int m = 1; m <= 4; ++m)
        for (int g = 1; g <= 4; ++g) records.push_back(build_Zmg(m, g));
    for (int n = 1; n <= 3; ++n)
        for (int g = 1; g <= 3; ++g)
            records.push_back(build_Y3(n, torus_knot(2, 2 * g + 1), torus_knot(2, 2 * g + 1)));
    records.push_back(build_S1xMK(trefoil()));
    records.push_back(build_S1xMK(figure_eight()));
    records.push_back(build_S1xMK(torus_knot(2, 7)));
    records.push_back(build_Z(build_En(3), "SigmaH", 2));
    records.push_back(
        build_Zprime(build_En(3), "SigmaH", 2, {1}, {true, "rim tori meet the dual fibration"}));
    records.push_back(knot_surgery(build_K3(), "F", trefoil()));
    records.push_back(knot_surgery(build_En(2), "T", figure_eight()));
    for (int n = 1; n <= 3; ++n)
        for (int g = 0; g <= 2; ++g) records.push_back(build_Mng(n, g));
    records.push_back(twisted_fiber_sum_check(2, 2).sum);

    for (const FourManifold& m : records) {
        if (!conjugation_symmetric(m, detail)) return false;
        if (m.spin == Tri::yes && m.sign % 16 != 0) {
            detail = m.name + ": spin with signature " + int_str(m.sign) + ", not 0 mod 16";
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    criterion("c01", "candidate basic classes on the doubled chain piece", check_candidates);
    criterion("c02", "chain-piece invariant is the signed conjugate pair on its top class",
              check_chain_invariant);
    criterion("c03", "spin family characteristic numbers from fiber-sum arithmetic",
              check_family_chars);
    criterion("c04", "restricted-genus tables, including the flagged m = 5 departure",
              check_genus_tables);
    criterion("c05", "surgery multiplies the invariant by m + 1, product over vectors",
              check_surgery_multiplier);
    criterion("c06", "surgery with any positive multiplicity obstructs symplectic structures",
              check_symplectic_verdicts);
    criterion("c07", "surgered auxiliary piece carries no basic classes",
              check_vanishing_scenario);
    criterion("c08", "glued family and its parallel twin are homeomorphic, surgeries preserve "
              "the type", check_homeomorphism);
    criterion("c09", "fibration euler counts, vanishing-cycle split, irreducible fibers",
              check_fibration_counts);
    criterion("c10", "twisted doubles reproduce the elliptic surface numbers",
              check_twisted_doubles);
    criterion("c11", "doubled elliptic surfaces: canonical square and knot-independence",
              check_doubled_surfaces);
    criterion("c12", "alexander oracle agreement, conjugation symmetry, spin signatures",
              check_algebra_oracles);

    std::cout << "acceptance: " << (12 - g_failures) << "/12 criteria passed" << std::endl;
    return g_failures == 0 ? 0 : 1;
}
