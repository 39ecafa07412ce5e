#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swcalc/sw_value.hpp"

namespace swcalc {

enum class Tri { yes, no, unknown };
enum class Parity { even, odd, unknown };

inline std::string tri_str(Tri t) {
    switch (t) {
        case Tri::yes: return "yes";
        case Tri::no: return "no";
        default: return "unknown";
    }
}

inline std::string parity_str(Parity p) {
    switch (p) {
        case Parity::even: return "even";
        case Parity::odd: return "odd";
        default: return "unknown";
    }
}

/**
 * An embedded surface the calculus keeps track of: its homology class in the
 * record's lattice, genus, self-intersection, and the topological side
 * conditions that surgery and sum operations test before they fire.
 */
struct TrackedSurface {
    std::string label;
    ClassVec cls;
    Int genus = 0;
    Int self_int = 0;
    bool essential = true;               // not null-homotopic
    bool complement_pi1_trivial = false; // complement is simply connected
    bool normally_generates_pi1 = false; // meridian-type normal generation
};

/**
 * Invariant record of a smooth closed oriented 4-manifold. The engine never
 * sees the manifold itself; every operation rewrites this record.
 *
 * `lattice` spans only the tracked part of H_2: the classes the calculus
 * needs for pairings, adjunction bounds and canonical classes. `e` and
 * `sign` are the full Euler characteristic and signature. `b1` is absent
 * when no rule determines it.
 */
struct FourManifold {
    std::string name;
    Int e = 0;
    Int sign = 0;
    std::optional<Int> b1;
    Tri simply_connected = Tri::unknown;
    Parity parity = Parity::unknown;
    Tri spin = Tri::unknown;
    Tri symplectic = Tri::unknown;
    LatticePtr lattice;
    SWValue sw = SWUnknown{};
    std::optional<ClassVec> canonical;
    std::vector<TrackedSurface> surfaces;
    std::map<std::string, std::string> flags;

    const TrackedSurface* find_surface(const std::string& label) const {
        for (const auto& s : surfaces)
            if (s.label == label) return &s;
        return nullptr;
    }
};

namespace detail {

inline const LatticePtr& require_lattice(const FourManifold& m) {
    if (!m.lattice) throw CalcError(m.name + ": record has no tracked lattice");
    return m.lattice;
}

inline const LatticePtr* sw_lattice_of(const SWValue& v) {
    if (const auto* e = std::get_if<SWExact>(&v)) return &e->value.lattice();
    if (const auto* m = std::get_if<SWMaxOnly>(&v)) return &m->terms.lattice();
    if (const auto* c = std::get_if<SWWithConstant>(&v)) return &c->terms.lattice();
    if (const auto* r = std::get_if<SWRational>(&v)) return &r->numerator.lattice();
    return nullptr;
}

}  // namespace detail

/** Consistency checks every construction runs on its output. */
inline void validate(const FourManifold& m) {
    if (m.b1 && *m.b1 < 0) throw CalcError(m.name + ": negative b1");
    if (m.simply_connected == Tri::yes && (!m.b1 || *m.b1 != 0))
        throw CalcError(m.name + ": simply connected requires b1 = 0");
    if (m.spin == Tri::yes && m.parity == Parity::odd)
        throw CalcError(m.name + ": spin manifolds have even intersection form");
    if (m.b1) {
        Int b2 = m.e - 2 + 2 * *m.b1;
        if (b2 < 0) throw CalcError(m.name + ": negative b2");
        if (abs_int(m.sign) > b2) throw CalcError(m.name + ": |signature| exceeds b2");
    }
    if (const LatticePtr* sl = detail::sw_lattice_of(m.sw)) {
        if (!m.lattice || !same_lattice(*sl, m.lattice))
            throw CalcError(m.name + ": invariant lattice differs from the tracked lattice");
    }
    sw_check(m.sw);
    if (m.canonical) {
        if (!m.lattice) throw CalcError(m.name + ": canonical class without a lattice");
        if (m.canonical->size() != m.lattice->rank())
            throw CalcError(m.name + ": canonical class has wrong dimension");
    }
    for (const auto& s : m.surfaces) {
        if (!m.lattice) throw CalcError(m.name + ": tracked surface without a lattice");
        if (s.cls.size() != m.lattice->rank())
            throw CalcError(m.name + ": surface " + s.label + " has wrong dimension");
        if (s.genus < 0) throw CalcError(m.name + ": surface " + s.label + " has negative genus");
        if (m.lattice->square(s.cls) != s.self_int)
            throw CalcError(m.name + ": surface " + s.label +
                            " self-intersection disagrees with the Gram matrix");
    }
}

// -- characteristic numbers --------------------------------------------------

inline Int c1_squared(const FourManifold& m) { return 2 * m.e + 3 * m.sign; }

/** (e + sign)/4: the holomorphic Euler characteristic on complex surfaces. */
inline Int quarter_characteristic(const FourManifold& m) {
    Int s = m.e + m.sign;
    if (s % 4 != 0)
        throw CalcError(m.name + ": e + sign = " + int_str(s) + " is not divisible by 4");
    return s / 4;
}

inline Int b2_total(const FourManifold& m) {
    if (!m.b1) throw CalcError(m.name + ": b2 needs b1, which is unknown");
    return m.e - 2 + 2 * *m.b1;
}

inline Int b2_plus(const FourManifold& m) {
    Int v = b2_total(m) + m.sign;
    if (v % 2 != 0) throw CalcError(m.name + ": b2 + sign is odd");
    return v / 2;
}

inline Int b2_minus(const FourManifold& m) {
    Int v = b2_total(m) - m.sign;
    if (v % 2 != 0) throw CalcError(m.name + ": b2 - sign is odd");
    return v / 2;
}

/** Sign (-1)^{(e+sign)/4} governing the conjugation symmetry of the invariant. */
inline int conjugation_sign(const FourManifold& m) {
    return quarter_characteristic(m) % 2 == 0 ? 1 : -1;
}

/** Self-intersection of a tracked surface under the tracked Gram matrix. */
inline Int surface_square(const FourManifold& m, const TrackedSurface& s) {
    return detail::require_lattice(m)->square(s.cls);
}

// -- comparison of topological types ----------------------------------------

enum class HomeoResult { homeomorphic, distinct, undecidable };

struct HomeoVerdict {
    HomeoResult result = HomeoResult::undecidable;
    std::string reason;
};

inline std::string homeo_str(HomeoResult r) {
    switch (r) {
        case HomeoResult::homeomorphic: return "homeomorphic";
        case HomeoResult::distinct: return "distinct";
        default: return "undecidable";
    }
}

/**
 * Decide the topological comparison from the record data alone. Distinctness
 * needs one provably different invariant. Sameness needs the full hypothesis
 * set: both simply connected with equal characteristic numbers and equal,
 * known parity, and an indefinite (or trivial) intersection form.
 */
inline HomeoVerdict homeo_compare(const FourManifold& a, const FourManifold& b) {
    if (a.e != b.e)
        return {HomeoResult::distinct,
                "euler characteristics differ: " + int_str(a.e) + " vs " + int_str(b.e)};
    if (a.sign != b.sign)
        return {HomeoResult::distinct,
                "signatures differ: " + int_str(a.sign) + " vs " + int_str(b.sign)};
    if (a.parity != Parity::unknown && b.parity != Parity::unknown && a.parity != b.parity)
        return {HomeoResult::distinct,
                "intersection form parities differ: " + parity_str(a.parity) + " vs " +
                    parity_str(b.parity)};
    if (a.b1 && b.b1 && *a.b1 != *b.b1)
        return {HomeoResult::distinct,
                "first Betti numbers differ: " + int_str(*a.b1) + " vs " + int_str(*b.b1)};

    if (a.simply_connected != Tri::yes || b.simply_connected != Tri::yes)
        return {HomeoResult::undecidable, "simple connectivity not asserted on both sides"};
    if (a.parity == Parity::unknown || b.parity == Parity::unknown)
        return {HomeoResult::undecidable, "intersection form parity unknown"};

    Int bp = b2_plus(a), bm = b2_minus(a);
    if (bp > 0 && bm > 0)
        return {HomeoResult::homeomorphic,
                "simply connected with matching indefinite forms (e, sign, parity agree)"};
    if (bp == 0 && bm == 0)
        return {HomeoResult::homeomorphic, "simply connected with trivial second homology"};
    return {HomeoResult::undecidable,
            "definite intersection form: rank and signature do not pin the form here"};
}

// -- symplectic consistency ---------------------------------------------------

enum class TaubesResult { consistent, obstructed, inapplicable };

struct TaubesVerdict {
    TaubesResult result = TaubesResult::inapplicable;
    std::string reason;
};

inline std::string taubes_str(TaubesResult r) {
    switch (r) {
        case TaubesResult::consistent: return "consistent";
        case TaubesResult::obstructed: return "obstructed";
        default: return "inapplicable";
    }
}

/**
 * Symplectic structures on records with b2+ > 1 force the invariant to be
 * nonzero with coefficient +-1 on the canonical class. Checks the record
 * against that constraint.
 */
inline TaubesVerdict taubes_symplectic_check(const FourManifold& m) {
    if (!m.b1) return {TaubesResult::inapplicable, "b1 unknown, b2+ guard unavailable"};
    if (b2_plus(m) <= 1) return {TaubesResult::inapplicable, "needs b2+ > 1"};
    if (sw_is_zero(m.sw))
        return {TaubesResult::obstructed, "invariant vanishes: no symplectic structure exists"};
    if (sw_is_unknown(m.sw)) return {TaubesResult::inapplicable, "invariant unknown"};
    if (!m.canonical) return {TaubesResult::inapplicable, "no canonical class recorded"};

    const LaurentElem* terms = nullptr;
    if (const auto* e = std::get_if<SWExact>(&m.sw)) {
        terms = &e->value;
    } else if (const auto* mo = std::get_if<SWMaxOnly>(&m.sw)) {
        // the canonical coefficient is certified only if it realizes the
        // extreme pairing that MaxOnly covers
        if (abs_int(m.lattice->pair(*m.canonical, mo->surface)) != mo->max_degree)
            return {TaubesResult::inapplicable,
                    "canonical class lies outside the certified pairing range"};
        terms = &mo->terms;
    } else {
        return {TaubesResult::inapplicable, "invariant carries undetermined parts"};
    }

    Int c = terms->coeff(*m.canonical);
    if (c == 1 || c == -1)
        return {TaubesResult::consistent, "coefficient on the canonical class is a unit"};
    return {TaubesResult::obstructed,
            "coefficient on the canonical class is " + int_str(c) + ", not a unit"};
}

}  // namespace swcalc
