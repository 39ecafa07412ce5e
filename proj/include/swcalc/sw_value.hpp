#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "swcalc/laurent.hpp"

namespace swcalc {

/**
 * The Seiberg-Witten invariant of a record, as much of it as the calculus can
 * certify. Exactness degrades under operations whose conclusions only pin
 * down part of the group ring, so the value is a tagged union:
 *
 *   SWExact         the full invariant
 *   SWMaxOnly       only coefficients of classes with extreme pairing against
 *                   a fixed surface class are certified; `terms` holds those,
 *                   every exponent k in them satisfies |k . surface| =
 *                   max_degree; everything of smaller pairing is unknown
 *   SWWithConstant  extreme terms known exactly, the remaining middle
 *                   coefficients collectively undetermined (named constant)
 *   SWZero          identically zero
 *   SWUnknown       nothing certified
 *   SWRational      closed-form marker for fibered non-simply-connected
 *                   pieces: alexander(t^2) / (t - 1/t)^2 times num/den,
 *                   stored unexpanded and never consumed arithmetically
 */
struct SWExact {
    LaurentElem value;
    bool operator==(const SWExact&) const = default;
};

struct SWMaxOnly {
    ClassVec surface;     // class realizing the extreme pairing
    Int max_degree;       // certified |pairing| value
    LaurentElem terms;    // certified part of the invariant
    std::string note;     // qualifier recorded by the producing operation
    bool operator==(const SWMaxOnly&) const = default;
};

struct SWWithConstant {
    LaurentElem terms;
    std::string constant_name = "c";
    bool operator==(const SWWithConstant&) const = default;
};

struct SWZero {
    bool operator==(const SWZero&) const = default;
};

struct SWUnknown {
    bool operator==(const SWUnknown&) const = default;
};

struct SWRational {
    LaurentElem numerator;  // alexander polynomial evaluated at t^2
    Int num = 1;
    Int den = 1;
    bool operator==(const SWRational&) const = default;
};

using SWValue = std::variant<SWExact, SWMaxOnly, SWWithConstant, SWZero, SWUnknown, SWRational>;

inline bool sw_is_exact(const SWValue& v) { return std::holds_alternative<SWExact>(v); }
inline bool sw_is_zero(const SWValue& v) { return std::holds_alternative<SWZero>(v); }
inline bool sw_is_unknown(const SWValue& v) { return std::holds_alternative<SWUnknown>(v); }

/** The exact Laurent element, or throw if the value is not fully certified. */
inline const LaurentElem& sw_exact_value(const SWValue& v) {
    if (const auto* e = std::get_if<SWExact>(&v)) return e->value;
    throw CalcError("sw_exact_value: invariant is not certified exact");
}

/** Structural invariants of each variant; called by record validation. */
inline void sw_check(const SWValue& v) {
    if (const auto* e = std::get_if<SWExact>(&v)) {
        const LaurentElem& a = e->value;
        if (!(laurent_bar(a) == a || laurent_bar(a) == -a))
            throw CalcError("sw_check: exact invariant is not conjugation (anti)symmetric");
    } else if (const auto* w = std::get_if<SWWithConstant>(&v)) {
        const LaurentElem& a = w->terms;
        if (!(laurent_bar(a) == a || laurent_bar(a) == -a))
            throw CalcError("sw_check: certified terms are not conjugation (anti)symmetric");
    } else if (const auto* m = std::get_if<SWMaxOnly>(&v)) {
        const auto& lat = m->terms.lattice();
        if (m->surface.size() != lat->rank())
            throw CalcError("sw_check: pairing surface has wrong dimension");
        for (const auto& [k, c] : m->terms.terms())
            if (abs_int(lat->pair(k, m->surface)) != m->max_degree)
                throw CalcError("sw_check: certified term does not realize the extreme pairing");
    }
}

/** Human-readable one-line rendering. */
inline std::string sw_str(const SWValue& v) {
    struct Visitor {
        std::string operator()(const SWExact& e) const { return e.value.str(); }
        std::string operator()(const SWMaxOnly& m) const {
            std::string s = m.terms.str() + " (certified at pairing +-" + int_str(m.max_degree) +
                            " against " + vec_str(m.surface) + "; lower part unknown)";
            if (!m.note.empty()) s += " [" + m.note + "]";
            return s;
        }
        std::string operator()(const SWWithConstant& c) const {
            return c.terms.str() + " + " + c.constant_name + " (undetermined middle terms)";
        }
        std::string operator()(const SWZero&) const { return "0 (vanishes)"; }
        std::string operator()(const SWUnknown&) const { return "unknown"; }
        std::string operator()(const SWRational& r) const {
            std::string s = "(" + r.numerator.str() + ") / (t - 1/t)^2";
            if (r.num != 1 || r.den != 1) s = int_str(r.num) + "/" + int_str(r.den) + " * " + s;
            return s;
        }
    };
    return std::visit(Visitor{}, v);
}

/** Tag used by serialization and dispatch. */
inline std::string sw_kind(const SWValue& v) {
    struct Visitor {
        std::string operator()(const SWExact&) const { return "exact"; }
        std::string operator()(const SWMaxOnly&) const { return "max_only"; }
        std::string operator()(const SWWithConstant&) const { return "with_constant"; }
        std::string operator()(const SWZero&) const { return "zero"; }
        std::string operator()(const SWUnknown&) const { return "unknown"; }
        std::string operator()(const SWRational&) const { return "rational"; }
    };
    return std::visit(Visitor{}, v);
}

}  // namespace swcalc
