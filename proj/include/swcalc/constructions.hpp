#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knots.hpp"
#include "manifold.hpp"

namespace swcalc {

/**
 * Cut-and-paste operations on invariant records.
 *
 * Every function here consumes records by value or const reference and
 * returns a fresh, validated record. Geometric input the calculus cannot
 * check (framings, complementary tori, pi_1 claims) enters through surface
 * flags and explicit hypothesis structs, so the provenance of each field
 * stays visible in the output.
 */

/** Side condition for gluings whose invariant is only defined up to rim tori. */
struct ComplementarityHypothesis {
    bool holds = false;
    std::string justification;
};

// -- knot surgery -------------------------------------------------------------

/**
 * Replace a tubular neighborhood of a self-intersection-zero torus by the
 * complement of a fibered knot K, crossed with S^1. The tracked lattice is
 * unchanged; the invariant picks up the factor Delta_K(t^2) in the torus
 * variable, the canonical class shifts by 2 genus(K) [T], and any tracked
 * surface meeting the torus d times gains |d| genus(K) handles.
 */
inline FourManifold knot_surgery(const FourManifold& m, const std::string& torus_label,
                                 const FiberedKnot& k) {
    const TrackedSurface* t = m.find_surface(torus_label);
    if (!t) throw CalcError(m.name + ": no tracked surface named " + torus_label);
    if (t->genus != 1 || t->self_int != 0)
        throw CalcError(m.name + ": knot surgery needs a square-zero torus, but " + torus_label +
                        " has genus " + int_str(t->genus) + " and square " + int_str(t->self_int));
    const LatticePtr& lat = detail::require_lattice(m);

    // A fibered knot of genus 0 is the unknot; its surgery is the identity
    // on the whole record, name included.
    if (k.genus == 0) return m;

    FourManifold out = m;
    out.name = m.name + "_" + k.name;
    out.flags.clear();

    if (const auto* ex = std::get_if<SWExact>(&m.sw)) {
        LaurentElem prod = laurent_mul(ex->value, alexander_sub_square(k, lat, t->cls));
        if (prod.is_zero())
            out.sw = SWZero{};
        else
            out.sw = SWExact{std::move(prod)};
    } else if (std::holds_alternative<SWZero>(m.sw)) {
        out.sw = SWZero{};
    } else if (std::holds_alternative<SWUnknown>(m.sw)) {
        out.sw = SWUnknown{};
    } else {
        throw CalcError(m.name + ": knot surgery needs the full invariant, but it is only " +
                        sw_kind(m.sw));
    }

    if (out.canonical) {
        for (int i = 0; i < lat->rank(); ++i)
            (*out.canonical)[i] += 2 * k.genus * t->cls[i];
    }
    for (auto& s : out.surfaces) {
        Int d = lat->pair(s.cls, t->cls);
        if (d != 0) s.genus += abs_int(d) * k.genus;
    }
    if (!(m.simply_connected == Tri::yes && t->complement_pi1_trivial))
        out.simply_connected = Tri::unknown;

    validate(out);
    return out;
}

// -- fiber sum ----------------------------------------------------------------

namespace detail {

/**
 * Certified top of an invariant along a square-zero genus-n surface: the terms
 * whose pairing with the surface reaches 2n-2. Empty optional means the record
 * carries no usable relative information across this surface.
 */
inline std::optional<std::vector<std::pair<ClassVec, Int>>> top_terms_along(const FourManifold& m,
                                                                            const ClassVec& cls,
                                                                            const Int& genus) {
    Int want = 2 * genus - 2;
    auto from_elem = [&](const LaurentElem& v) -> std::optional<std::vector<std::pair<ClassVec, Int>>> {
        if (v.is_zero()) return std::nullopt;
        if (max_pairing(v, cls) != want) return std::nullopt;
        return terms_with_pairing(v, cls, want);
    };
    if (const auto* ex = std::get_if<SWExact>(&m.sw)) return from_elem(ex->value);
    if (const auto* wc = std::get_if<SWWithConstant>(&m.sw)) {
        // The undetermined constant sits at pairing zero, so the top is only
        // certified when it lies strictly above that.
        if (want <= 0) return std::nullopt;
        return from_elem(wc->terms);
    }
    if (const auto* mo = std::get_if<SWMaxOnly>(&m.sw)) {
        if (mo->surface != cls || mo->max_degree != want) return std::nullopt;
        return from_elem(mo->terms);
    }
    return std::nullopt;
}

}  // namespace detail

/**
 * Glue two records along tracked square-zero surfaces of the same genus n >= 1.
 *
 * Euler characteristic and signature follow Novikov additivity; parity and
 * the symplectic flag combine by the usual rules. pi_1 control comes from the
 * surface flags: the sum is simply connected when one side has simply
 * connected complement and the other surface normally generates its pi_1.
 *
 * The invariant of the sum is certified only at the extreme pairing 2n-2
 * against the glued surface, where the relative top coefficients multiply.
 * The output lattice is rebuilt from scratch: a class C for the surface and
 * one class per product of top terms.
 */
inline FourManifold fiber_sum(const FourManifold& m1, const std::string& label1,
                              const FourManifold& m2, const std::string& label2,
                              const ComplementarityHypothesis& comp = {}) {
    const TrackedSurface* s1 = m1.find_surface(label1);
    if (!s1) throw CalcError(m1.name + ": no tracked surface named " + label1);
    const TrackedSurface* s2 = m2.find_surface(label2);
    if (!s2) throw CalcError(m2.name + ": no tracked surface named " + label2);
    if (s1->genus != s2->genus)
        throw CalcError("fiber sum: genus mismatch, " + label1 + " has genus " +
                        int_str(s1->genus) + " but " + label2 + " has genus " + int_str(s2->genus));
    if (s1->genus < 1) throw CalcError("fiber sum: glued surface must have genus at least 1");
    if (s1->self_int != 0 || s2->self_int != 0)
        throw CalcError("fiber sum: glued surfaces must have square zero");
    const Int n = s1->genus;

    FourManifold out;
    out.name = m1.name + " #_{" + label1 + "=" + label2 + "} " + m2.name;
    out.e = m1.e + m2.e + 4 * n - 4;
    out.sign = m1.sign + m2.sign;

    if (m1.parity == Parity::odd || m2.parity == Parity::odd)
        out.parity = Parity::odd;
    else if (m1.parity == Parity::even && m2.parity == Parity::even)
        out.parity = Parity::even;
    else
        out.parity = Parity::unknown;
    out.spin = Tri::unknown;
    if (m1.symplectic == Tri::yes && m2.symplectic == Tri::yes)
        out.symplectic = Tri::yes;
    else
        out.symplectic = Tri::unknown;

    bool pi1_dies = (s1->complement_pi1_trivial && s2->normally_generates_pi1) ||
                    (s2->complement_pi1_trivial && s1->normally_generates_pi1);
    if (pi1_dies) {
        out.simply_connected = Tri::yes;
        out.b1 = Int(0);
    }

    auto top1 = detail::top_terms_along(m1, s1->cls, n);
    auto top2 = detail::top_terms_along(m2, s2->cls, n);

    if (std::holds_alternative<SWZero>(m1.sw) || std::holds_alternative<SWZero>(m2.sw)) {
        out.sw = SWZero{};
        out.lattice = make_lattice({"C"}, {{Int(0)}});
        out.surfaces.push_back({"C", out.lattice->unit(0), n, Int(0), true, false, false});
    } else if (top1 && top2) {
        Int c1sq = 2 * out.e + 3 * out.sign;
        size_t pairs = top1->size() * top2->size();
        std::vector<std::string> names{"C"};
        if (pairs == 1) {
            names.push_back("E");
        } else {
            for (size_t p = 1; p <= pairs; ++p) names.push_back("E" + std::to_string(p));
        }
        int rk = static_cast<int>(names.size());
        std::vector<std::vector<Int>> gram(rk, std::vector<Int>(rk, Int(0)));
        for (int i = 1; i < rk; ++i) {
            gram[0][i] = gram[i][0] = 2 * n - 2;
            gram[i][i] = c1sq;
        }
        out.lattice = make_lattice(names, gram);

        int sgn = conjugation_sign(out);
        LaurentElem terms(out.lattice);
        int idx = 1;
        for (const auto& [e1, c1] : *top1) {
            for (const auto& [e2, c2] : *top2) {
                ClassVec cls = out.lattice->unit(idx++);
                terms.add_term(cls, c1 * c2);
                terms.add_term(vec_neg(cls), sgn * c1 * c2);
            }
        }
        out.sw = SWMaxOnly{out.lattice->unit(0), 2 * n - 2, terms,
                           "top coefficients of the gluing formula; lower terms not tracked"};
        if (pairs == 1) out.canonical = out.lattice->unit(1);
        out.surfaces.push_back({"C", out.lattice->unit(0), n, Int(0), true, false, false});
    } else {
        out.sw = SWUnknown{};
        out.lattice = make_lattice({"C"}, {{Int(0)}});
        out.surfaces.push_back({"C", out.lattice->unit(0), n, Int(0), true, false, false});
    }

    out.flags["complementary"] = comp.holds ? "yes" : "no";
    if (!comp.justification.empty()) out.flags["complementary_justification"] = comp.justification;

    validate(out);
    return out;
}

// -- torus surgery ------------------------------------------------------------

/**
 * Effect of a single surgery of multiplicity m on a null-homologous torus:
 * the invariant of the result is the invariant of the unsurgered record
 * minus m times the given superposition of invariants of the core piece.
 * Homology, and hence the tracked lattice, is untouched.
 */
inline SWValue surgery_formula(const SWValue& sw_z, const LaurentElem& zhat_sum, const Int& m) {
    auto combine = [&](const LaurentElem& v) { return v - m * zhat_sum; };
    if (const auto* ex = std::get_if<SWExact>(&sw_z)) {
        LaurentElem r = combine(ex->value);
        if (r.is_zero()) return SWZero{};
        return SWExact{std::move(r)};
    }
    if (std::holds_alternative<SWZero>(sw_z)) {
        LaurentElem r = LaurentElem::zero(zhat_sum.lattice()) - m * zhat_sum;
        if (r.is_zero()) return SWZero{};
        return SWExact{std::move(r)};
    }
    if (const auto* mo = std::get_if<SWMaxOnly>(&sw_z)) {
        LaurentElem r = combine(mo->terms);
        if (r.is_zero()) return SWZero{};
        return SWMaxOnly{mo->surface, mo->max_degree, std::move(r), mo->note};
    }
    throw CalcError("surgery formula needs an exact, vanishing or top-certified invariant, got " +
                    sw_kind(sw_z));
}

/**
 * Surgeries on the standard null-homologous tori of a glued record built with
 * the complementary-tori hypothesis. Each multiplicity m_i >= 0 scales the
 * invariant by m_i + 1: the core-piece superposition equals minus the
 * unsurgered invariant, because the multiplicity -1 surgery kills it.
 */
inline FourManifold torus_surgery(const FourManifold& zp, const std::vector<Int>& multiplicities) {
    auto fam = zp.flags.find("family");
    if (fam == zp.flags.end() || fam->second != "Zprime")
        throw CalcError(zp.name + ": torus surgery is only defined on glued records " +
                        "with standard null-homologous tori");
    auto compl_flag = zp.flags.find("complementary");
    if (compl_flag == zp.flags.end() || compl_flag->second != "yes")
        throw CalcError(zp.name + ": torus surgery needs the complementary-tori hypothesis " +
                        "to pin down the invariant");
    auto cap_it = zp.flags.find("surgery_capacity");
    long capacity = cap_it == zp.flags.end() ? 0 : std::stol(cap_it->second);
    if (static_cast<long>(multiplicities.size()) > capacity)
        throw CalcError(zp.name + ": only " + std::to_string(capacity) +
                        " surgery tori are available");

    FourManifold out = zp;
    std::string suffix = "(";
    for (size_t i = 0; i < multiplicities.size(); ++i) {
        const Int& m = multiplicities[i];
        if (m < 0) throw CalcError(zp.name + ": surgery multiplicities must be non-negative");
        suffix += (i ? "," : "") + int_str(m);

        LaurentElem base(detail::require_lattice(out));
        if (const auto* ex = std::get_if<SWExact>(&out.sw))
            base = ex->value;
        else if (const auto* mo = std::get_if<SWMaxOnly>(&out.sw))
            base = mo->terms;
        else if (!std::holds_alternative<SWZero>(out.sw))
            throw CalcError(out.name + ": torus surgery needs a determined invariant, got " +
                            sw_kind(out.sw));
        out.sw = surgery_formula(out.sw, -base, m);
        if (m >= 1) out.symplectic = Tri::no;
    }
    out.name += suffix + ")";
    out.flags["surgery_capacity"] =
        std::to_string(capacity - static_cast<long>(multiplicities.size()));

    validate(out);
    return out;
}

// -- elementary pieces --------------------------------------------------------

/** Product of the circle with the zero-surgery on a fibered knot. */
inline FourManifold build_S1xMK(const FiberedKnot& k) {
    FourManifold m;
    m.name = "S1xM_" + k.name;
    m.e = 0;
    m.sign = 0;
    m.b1 = Int(2);
    m.simply_connected = Tri::no;
    m.parity = Parity::even;
    m.spin = Tri::yes;
    m.symplectic = Tri::yes;
    m.lattice = make_lattice({"T", "Sigma"}, {{Int(0), Int(1)}, {Int(1), Int(0)}});
    m.sw = SWRational{alexander_sub_square(k, m.lattice, 0)};
    m.surfaces.push_back({"T", m.lattice->unit(0), Int(1), Int(0), true, false, true});
    m.surfaces.push_back({"Sigma", m.lattice->unit(1), Int(k.genus), Int(0), true, false, false});
    validate(m);
    return m;
}

/**
 * Chain of n copies of the circle times the zero-surgery on the genus-g
 * fibered chain knot, glued fiber-to-section into a loop. The tracked classes
 * are the torus section S, a genus-g fiber Sigma, and at each of the n-1
 * junctions 2g vanishing classes V (genus 2, square 2) interlocking a chain
 * of 2g rim tori R (genus 1, square 0).
 */
inline FourManifold build_Y(int n, int g) {
    if (n < 2) throw CalcError("build_Y: need at least two pieces");
    if (g < 1) throw CalcError("build_Y: fiber genus must be at least 1");

    int junctions = n - 1;
    int rk = 2 + 4 * g * junctions;
    std::vector<std::string> names{"S", "Sigma"};
    for (int j = 1; j <= junctions; ++j) {
        for (int i = 1; i <= 2 * g; ++i)
            names.push_back("V" + std::to_string(j) + "_" + std::to_string(i));
        for (int i = 1; i <= 2 * g; ++i)
            names.push_back("R" + std::to_string(j) + "_" + std::to_string(i));
    }
    std::vector<std::vector<Int>> gram(rk, std::vector<Int>(rk, Int(0)));
    gram[0][1] = gram[1][0] = 1;
    for (int j = 0; j < junctions; ++j) {
        int base = 2 + 4 * g * j;
        for (int i = 0; i < 2 * g; ++i) {
            int vi = base + i;
            gram[vi][vi] = 2;
            // V_i meets the rim chain in consecutive members, with the sign
            // dictated by the monodromy direction.
            if (i + 1 < 2 * g) {
                gram[vi][base + 2 * g + i + 1] = 1;
                gram[base + 2 * g + i + 1][vi] = 1;
            }
            if (i - 1 >= 0) {
                gram[vi][base + 2 * g + i - 1] = -1;
                gram[base + 2 * g + i - 1][vi] = -1;
            }
        }
    }

    FourManifold m;
    m.name = "Y(" + std::to_string(n) + "," + std::to_string(g) + ")";
    m.e = Int(n - 1) * (4 * g - 4);
    m.sign = 0;
    m.b1 = Int(2 * n);
    m.simply_connected = Tri::no;
    m.parity = Parity::even;
    m.symplectic = Tri::yes;
    m.lattice = make_lattice(std::move(names), std::move(gram));

    ClassVec beta(rk, Int(0));
    beta[0] = 2 * g - 2;
    beta[1] = 2 * n - 2;
    m.canonical = beta;

    LaurentElem terms(m.lattice);
    if (g >= 2) {
        int sgn = ((g - 1) * (n - 1)) % 2 == 0 ? 1 : -1;
        terms.add_term(beta, 1);
        terms.add_term(vec_neg(beta), sgn);
        m.sw = SWExact{std::move(terms)};
    } else {
        terms.add_term(beta, 1);
        terms.add_term(vec_neg(beta), 1);
        m.sw = SWWithConstant{std::move(terms), "c"};
    }

    m.surfaces.push_back({"S", m.lattice->unit(0), Int(n), Int(0), true, false, true});
    m.surfaces.push_back({"Sigma", m.lattice->unit(1), Int(g), Int(0), true, false, false});
    for (int j = 0; j < junctions; ++j) {
        int base = 2 + 4 * g * j;
        for (int i = 0; i < 2 * g; ++i)
            m.surfaces.push_back(
                {m.lattice->basis()[base + i], m.lattice->unit(base + i), Int(2), Int(2), true,
                 false, false});
        for (int i = 0; i < 2 * g; ++i)
            m.surfaces.push_back({m.lattice->basis()[base + 2 * g + i],
                                  m.lattice->unit(base + 2 * g + i), Int(1), Int(0), true, false,
                                  false});
    }

    validate(m);
    return m;
}

/**
 * One genus-g chain piece with parallel genus-g fibers glued to the sections
 * of auxiliary chains of lengths k_1, ..., k_r. The section S' gains one
 * handle per auxiliary fiber, ending at genus 1 + sum k_i; each auxiliary
 * chain contributes g-1 junctions with rim and vanishing chains of length
 * 2 k_i.
 */
inline FourManifold build_Yprime(int g, const std::vector<int>& lengths) {
    if (g < 1) throw CalcError("build_Yprime: fiber genus must be at least 1");
    if (lengths.empty()) throw CalcError("build_Yprime: need at least one auxiliary chain");
    int ksum = 0;
    for (int k : lengths) {
        if (k < 1) throw CalcError("build_Yprime: chain lengths must be positive");
        ksum += k;
    }

    std::vector<std::string> names{"Sprime", "Sigma"};
    for (size_t s = 0; s < lengths.size(); ++s) {
        for (int j = 1; j <= g - 1; ++j) {
            for (int i = 1; i <= 2 * lengths[s]; ++i)
                names.push_back("V" + std::to_string(s + 1) + "_" + std::to_string(j) + "_" +
                                std::to_string(i));
            for (int i = 1; i <= 2 * lengths[s]; ++i)
                names.push_back("R" + std::to_string(s + 1) + "_" + std::to_string(j) + "_" +
                                std::to_string(i));
        }
    }
    int rk = static_cast<int>(names.size());
    std::vector<std::vector<Int>> gram(rk, std::vector<Int>(rk, Int(0)));
    gram[0][1] = gram[1][0] = 1;
    int base = 2;
    std::vector<std::pair<int, int>> blocks;  // (base index, chain length 2k)
    for (size_t s = 0; s < lengths.size(); ++s) {
        int len = 2 * lengths[s];
        for (int j = 1; j <= g - 1; ++j) {
            blocks.emplace_back(base, len);
            for (int i = 0; i < len; ++i) {
                int vi = base + i;
                gram[vi][vi] = 2;
                if (i + 1 < len) {
                    gram[vi][base + len + i + 1] = 1;
                    gram[base + len + i + 1][vi] = 1;
                }
                if (i - 1 >= 0) {
                    gram[vi][base + len + i - 1] = -1;
                    gram[base + len + i - 1][vi] = -1;
                }
            }
            base += 2 * len;
        }
    }

    FourManifold m;
    m.name = "Y'(" + std::to_string(g) + ";";
    for (size_t s = 0; s < lengths.size(); ++s)
        m.name += (s ? "," : "") + std::to_string(lengths[s]);
    m.name += ")";
    m.e = Int(4) * (g - 1) * ksum;
    m.sign = 0;
    m.b1 = Int(2);
    m.simply_connected = Tri::no;
    m.parity = Parity::even;
    m.symplectic = Tri::yes;
    m.lattice = make_lattice(std::move(names), std::move(gram));

    ClassVec beta(rk, Int(0));
    beta[0] = 2 * g - 2;
    beta[1] = 2 * ksum;
    m.canonical = beta;

    LaurentElem terms(m.lattice);
    if (g >= 2) {
        int sgn = ((g - 1) * ksum) % 2 == 0 ? 1 : -1;
        terms.add_term(beta, 1);
        terms.add_term(vec_neg(beta), sgn);
        m.sw = SWExact{std::move(terms)};
    } else {
        terms.add_term(beta, 1);
        terms.add_term(vec_neg(beta), 1);
        m.sw = SWWithConstant{std::move(terms), "c"};
    }

    m.surfaces.push_back({"Sprime", m.lattice->unit(0), Int(1 + ksum), Int(0), true, false, true});
    m.surfaces.push_back({"Sigma", m.lattice->unit(1), Int(g), Int(0), true, false, false});
    for (auto [b, len] : blocks) {
        for (int i = 0; i < len; ++i)
            m.surfaces.push_back({m.lattice->basis()[b + i], m.lattice->unit(b + i), Int(2), Int(2),
                                  true, false, false});
        for (int i = 0; i < len; ++i)
            m.surfaces.push_back({m.lattice->basis()[b + len + i], m.lattice->unit(b + len + i),
                                  Int(1), Int(0), true, false, false});
    }

    validate(m);
    return m;
}

/**
 * The elliptic surface without multiple fibers, tracked by a regular fiber T
 * and a square-zero bisection-type surface of genus n-1 meeting T twice.
 */
inline FourManifold build_En(int n) {
    if (n < 1) throw CalcError("build_En: need n >= 1");
    FourManifold m;
    m.name = "E(" + std::to_string(n) + ")";
    m.e = Int(12) * n;
    m.sign = Int(-8) * n;
    m.b1 = Int(0);
    m.simply_connected = Tri::yes;
    m.parity = n % 2 == 0 ? Parity::even : Parity::odd;
    m.spin = n % 2 == 0 ? Tri::yes : Tri::no;
    m.symplectic = Tri::yes;
    m.lattice = make_lattice({"T", "SigmaH"}, {{Int(0), Int(2)}, {Int(2), Int(0)}});

    ClassVec kan{Int(n - 2), Int(0)};
    m.canonical = kan;
    if (n >= 2) {
        LaurentElem f(m.lattice);
        f.add_term({Int(1), Int(0)}, 1);
        f.add_term({Int(-1), Int(0)}, -1);
        LaurentElem v = LaurentElem::constant(m.lattice, 1);
        for (int i = 0; i < n - 2; ++i) v = laurent_mul(v, f);
        m.sw = SWExact{std::move(v)};
    } else {
        m.sw = SWUnknown{};
    }

    m.surfaces.push_back({"T", m.lattice->unit(0), Int(1), Int(0), true, true, true});
    m.surfaces.push_back({"SigmaH", m.lattice->unit(1), Int(n - 1), Int(0), true, true, true});
    validate(m);
    return m;
}

/** The K3 surface tracked by an elliptic fiber F and a transverse torus C. */
inline FourManifold build_K3() {
    FourManifold m;
    m.name = "K3";
    m.e = 24;
    m.sign = -16;
    m.b1 = Int(0);
    m.simply_connected = Tri::yes;
    m.parity = Parity::even;
    m.spin = Tri::yes;
    m.symplectic = Tri::yes;
    m.lattice = make_lattice({"F", "C"}, {{Int(0), Int(1)}, {Int(1), Int(0)}});
    m.sw = SWExact{LaurentElem::constant(m.lattice, 1)};
    m.canonical = ClassVec{Int(0), Int(0)};
    m.surfaces.push_back({"F", m.lattice->unit(0), Int(1), Int(0), true, true, true});
    m.surfaces.push_back({"C", m.lattice->unit(1), Int(1), Int(0), true, true, false});
    validate(m);
    return m;
}

/**
 * Horikawa-type surface on the Noether line used as the base of the geography
 * families: chi reads 8m-1 and c_1^2 reads 16m-8. The genus-2 curve C has
 * square zero, simply connected complement, and meets the canonical class
 * twice, so 2 chi(C) - 2 is sharp.
 */
inline FourManifold build_Horikawa(int m_par) {
    if (m_par < 1) throw CalcError("build_Horikawa: need m >= 1");
    FourManifold m;
    m.name = "H(" + std::to_string(m_par) + ")";
    m.e = Int(80) * m_par - 4;
    m.sign = Int(-48) * m_par;
    m.b1 = Int(0);
    m.simply_connected = Tri::yes;
    m.parity = Parity::even;
    m.spin = Tri::yes;
    m.symplectic = Tri::yes;
    m.lattice =
        make_lattice({"C", "K"}, {{Int(0), Int(2)}, {Int(2), Int(16) * m_par - 8}});
    LaurentElem v(m.lattice);
    v.add_term({Int(0), Int(1)}, 1);
    v.add_term({Int(0), Int(-1)}, -1);
    m.sw = SWExact{std::move(v)};
    m.canonical = ClassVec{Int(0), Int(1)};
    m.surfaces.push_back({"C", m.lattice->unit(0), Int(2), Int(0), true, true, false});
    validate(m);
    return m;
}

// -- glued families -----------------------------------------------------------

/**
 * Fiber sum of a record X with the chain piece Y(n,g) along a genus-n surface
 * C in X whose complement is simply connected. Audits the characteristic
 * bookkeeping: the sum gains g(n-1) on chi and 8g(n-1) on c_1^2.
 */
inline FourManifold build_Z(const FourManifold& x, const std::string& c_label, int g) {
    const TrackedSurface* c = x.find_surface(c_label);
    if (!c) throw CalcError(x.name + ": no tracked surface named " + c_label);
    if (c->genus < 2)
        throw CalcError(x.name + ": gluing surface " + c_label + " must have genus at least 2");
    if (c->self_int != 0)
        throw CalcError(x.name + ": gluing surface " + c_label + " must have square zero");
    if (!c->complement_pi1_trivial)
        throw CalcError(x.name + ": complement of " + c_label +
                        " must be simply connected to keep the sum simply connected");
    int n = static_cast<int>(c->genus);

    FourManifold out = fiber_sum(x, c_label, build_Y(n, g), "S");
    out.name = "Z(" + x.name + ";g=" + std::to_string(g) + ")";
    out.flags.clear();
    out.flags["family"] = "Z";

    if (c1_squared(out) != c1_squared(x) + Int(8) * g * (n - 1))
        throw CalcError(out.name + ": c_1^2 bookkeeping failed");
    if (quarter_characteristic(out) != quarter_characteristic(x) + Int(g) * (n - 1))
        throw CalcError(out.name + ": chi bookkeeping failed");
    validate(out);
    return out;
}

/**
 * The geography family member Z(m,g): the Horikawa-type base summed with
 * Y(2,g) along its genus-2 curve. The result is spin with chi = 8m + g - 1
 * and c_1^2 = 16m + 8g - 8, and its full invariant is a conjugate pair on
 * the glued top class.
 */
inline FourManifold build_Zmg(int m_par, int g) {
    FourManifold out = build_Z(build_Horikawa(m_par), "C", g);
    out.name = "Z(" + std::to_string(m_par) + "," + std::to_string(g) + ")";
    out.spin = Tri::yes;
    out.parity = Parity::even;
    if (const auto* mo = std::get_if<SWMaxOnly>(&out.sw)) {
        // Both summands fiber over the glued curve, so the relative invariant
        // is a single conjugate pair and determines the invariant outright.
        out.sw = SWExact{mo->terms};
    }
    out.flags["family"] = "Zmg";
    out.flags["m"] = std::to_string(m_par);
    out.flags["g"] = std::to_string(g);
    validate(out);
    return out;
}

/**
 * Fiber sum of X with the auxiliary-chain piece Y'(g; k_1..k_r) along a
 * surface of genus 1 + sum k_i. When the complementary-tori hypothesis is
 * granted the record supports 2g torus surgeries; without it the top terms
 * are only certified up to rim-torus translation.
 */
inline FourManifold build_Zprime(const FourManifold& x, const std::string& c_label, int g,
                                 const std::vector<int>& lengths,
                                 const ComplementarityHypothesis& comp) {
    FourManifold yp = build_Yprime(g, lengths);
    const TrackedSurface* c = x.find_surface(c_label);
    if (!c) throw CalcError(x.name + ": no tracked surface named " + c_label);
    int ksum = 0;
    for (int k : lengths) ksum += k;
    if (c->genus != Int(1 + ksum))
        throw CalcError(x.name + ": gluing surface " + c_label + " has genus " +
                        int_str(c->genus) + " but the chain section has genus " +
                        std::to_string(1 + ksum));
    if (!c->complement_pi1_trivial)
        throw CalcError(x.name + ": complement of " + c_label +
                        " must be simply connected to keep the sum simply connected");

    FourManifold out = fiber_sum(x, c_label, yp, "Sprime", comp);
    out.name = "Z'(" + x.name + ";g=" + std::to_string(g) + ")";
    out.flags["family"] = "Zprime";
    out.flags["surgery_capacity"] = std::to_string(2 * g);
    if (!comp.holds) {
        if (auto* mo = std::get_if<SWMaxOnly>(&out.sw))
            mo->note = "top terms certified only up to rim-torus translation";
    }

    if (c1_squared(out) != c1_squared(x) + Int(8) * g * ksum)
        throw CalcError(out.name + ": c_1^2 bookkeeping failed");
    if (quarter_characteristic(out) != quarter_characteristic(x) + Int(g) * ksum)
        throw CalcError(out.name + ": chi bookkeeping failed");
    validate(out);
    return out;
}

/**
 * Fiber sum of two knot-surgered elliptic surfaces along their horizontal
 * genus 2g+n-1 surfaces. The two knots must have the same genus; the result
 * is tracked by a genus-3 surface tau and the glued surface, with canonical
 * class (2g+n-2) tau + 2 SigmaH and a conjugate-pair invariant.
 */
inline FourManifold build_Y3(int n, const FiberedKnot& k1, const FiberedKnot& k2) {
    if (k1.genus != k2.genus)
        throw CalcError("build_Y3: knots must have the same genus, got " +
                        std::to_string(k1.genus) + " and " + std::to_string(k2.genus));
    int g = k1.genus;

    FourManifold e1 = knot_surgery(build_En(n), "T", k1);
    FourManifold e2 = knot_surgery(build_En(n), "T", k2);
    FourManifold out = fiber_sum(e1, "SigmaH", e2, "SigmaH",
                                 {true, "parallel fibered structures give matching framings"});
    if (n >= 2) {
        if (const auto* mo = std::get_if<SWMaxOnly>(&out.sw)) {
            for (const auto& [e, c] : mo->terms.terms())
                if (abs_int(c) != 1)
                    throw CalcError(out.name + ": unexpected top coefficient " + int_str(c));
        } else {
            throw CalcError(out.name + ": gluing formula lost the top terms");
        }
    }

    out.name = "Y(" + std::to_string(n) + ";" + k1.name + "," + k2.name + ")";
    out.lattice = make_lattice({"tau", "SigmaH"}, {{Int(0), Int(2)}, {Int(2), Int(0)}});
    ClassVec ky{Int(2 * g + n - 2), Int(2)};
    LaurentElem v(out.lattice);
    v.add_term(ky, 1);
    v.add_term(vec_neg(ky), n % 2 == 0 ? 1 : -1);
    out.sw = SWExact{std::move(v)};
    out.canonical = ky;
    out.surfaces.clear();
    out.surfaces.push_back({"tau", out.lattice->unit(0), Int(3), Int(0), true, false, false});
    out.surfaces.push_back(
        {"SigmaH", out.lattice->unit(1), Int(2 * g + n - 1), Int(0), true, false, false});
    out.flags.clear();
    out.flags["family"] = "Y3";

    if (c1_squared(out) != Int(16) * g + 8 * n - 16)
        throw CalcError(out.name + ": c_1^2 bookkeeping failed");
    if (out.lattice->square(ky) != c1_squared(out))
        throw CalcError(out.name + ": canonical square disagrees with c_1^2");
    validate(out);
    return out;
}

/**
 * Rank of the subgroup of H_2 spanned by rim tori of a glued surface: the
 * part of H_1 of the surface not hit by the image of the complement. The
 * engine cannot derive the image rank; callers supply it as a hypothesis.
 */
inline Int rim_tori_rank(const Int& h1_of_surface, const Int& image_rank) {
    if (image_rank < 0 || image_rank > h1_of_surface)
        throw CalcError("rim_tori_rank: image rank must lie between 0 and h1");
    return h1_of_surface - image_rank;
}

}  // namespace swcalc
