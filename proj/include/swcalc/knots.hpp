#pragma once

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "swcalc/laurent.hpp"

namespace swcalc {

// Shared rank-1 lattice for the single knot variable; the pairing is never
// used on this lattice, only the exponents.
inline LatticePtr knot_variable_lattice() {
    static LatticePtr lat = make_lattice({"t"}, {{Int(0)}});
    return lat;
}

namespace detail {

// Dense integer polynomials, coefficients ascending from degree 0.
using Poly = std::vector<Int>;

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    poly_trim(r);
    return r;
}

// Exact division; the callers divide cyclotomic-style factors so a nonzero
// remainder means a caller bug.
inline Poly poly_div_exact(Poly num, const Poly& den) {
    poly_trim(num);
    if (den.empty() || den.back() == 0) throw CalcError("poly_div_exact: zero divisor");
    if (num.empty()) return {};
    if (num.size() < den.size()) throw CalcError("poly_div_exact: inexact division");
    Poly q(num.size() - den.size() + 1, Int(0));
    for (size_t i = q.size(); i-- > 0;) {
        Int c = num[i + den.size() - 1];
        if (c % den.back() != 0) throw CalcError("poly_div_exact: inexact division");
        c /= den.back();
        q[i] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (const Int& c : num)
        if (c != 0) throw CalcError("poly_div_exact: nonzero remainder");
    return q;
}

inline Poly poly_tn_minus_1(int n) {  // t^n - 1
    Poly p(n + 1, Int(0));
    p[0] = -1;
    p[n] = 1;
    return p;
}

}  // namespace detail

/**
 * Fibered knot record: a name, the fiber genus, and the symmetrized Alexander
 * polynomial over the knot-variable lattice. Construction validates what the
 * engine relies on downstream: conjugation symmetry, value +-1 at t = 1, and
 * top exponent equal to the genus (monic up to sign).
 */
struct FiberedKnot {
    std::string name;
    int genus = 0;
    LaurentElem alexander = LaurentElem::constant(knot_variable_lattice(), 1);

    FiberedKnot(std::string name_, int genus_, LaurentElem alex)
        : name(std::move(name_)), genus(genus_), alexander(std::move(alex)) {
        if (genus < 0) throw CalcError("FiberedKnot: negative genus");
        if (!same_lattice(alexander.lattice(), knot_variable_lattice()))
            throw CalcError("FiberedKnot: alexander polynomial must live on the knot variable lattice");
        if (laurent_bar(alexander) != alexander)
            throw CalcError("FiberedKnot: alexander polynomial must be conjugation symmetric");
        Int at1 = alexander.eval_at_one();
        if (at1 != 1 && at1 != -1)
            throw CalcError("FiberedKnot: alexander polynomial must evaluate to +-1 at t=1");
        Int top = 0;
        bool monic = false;
        for (const auto& [e, c] : alexander.terms())
            if (e[0] > top || (e[0] == top && !monic)) {
                top = e[0];
                monic = (c == 1 || c == -1);
            }
        if (top != genus)
            throw CalcError("FiberedKnot: top exponent must equal the genus");
        if (!monic)
            throw CalcError("FiberedKnot: fibered knots have monic alexander polynomial");
    }
};

/**
 * Symmetrized Alexander polynomial of the (p,q) torus knot via the exact
 * quotient (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)), recentred so the
 * exponents run from -(p-1)(q-1)/2 to +(p-1)(q-1)/2. Mirrors (negative
 * parameters) share the polynomial. Requires |p|, |q| >= 2 and coprime.
 */
inline LaurentElem alexander_torus_knot(int p, int q) {
    int P = p < 0 ? -p : p;
    int Q = q < 0 ? -q : q;
    if (P < 2 || Q < 2) throw CalcError("alexander_torus_knot: |p|, |q| must be >= 2");
    if (std::gcd(P, Q) != 1) throw CalcError("alexander_torus_knot: p and q must be coprime");

    using namespace detail;
    Poly num = poly_mul(poly_tn_minus_1(P * Q), poly_tn_minus_1(1));
    Poly unsym = poly_div_exact(poly_div_exact(num, poly_tn_minus_1(P)), poly_tn_minus_1(Q));

    const int span = (P - 1) * (Q - 1);  // degree of the unsymmetrized polynomial
    LaurentElem out(knot_variable_lattice());
    for (size_t d = 0; d < unsym.size(); ++d)
        out.add_term({Int(static_cast<long>(d) - span / 2)}, unsym[d]);
    return out;
}

inline FiberedKnot torus_knot(int p, int q) {
    int P = p < 0 ? -p : p;
    int Q = q < 0 ? -q : q;
    std::string nm = "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
    return FiberedKnot(nm, (P - 1) * (Q - 1) / 2, alexander_torus_knot(p, q));
}

inline FiberedKnot unknot() {
    return FiberedKnot("unknot", 0, LaurentElem::constant(knot_variable_lattice(), 1));
}

inline FiberedKnot trefoil() {
    return FiberedKnot("trefoil", 1, alexander_torus_knot(3, 2));
}

inline FiberedKnot figure_eight() {
    LaurentElem a(knot_variable_lattice());
    a.add_term({Int(1)}, -1);
    a.add_term({Int(0)}, 3);
    a.add_term({Int(-1)}, -1);
    return FiberedKnot("figure8", 1, a);
}

/**
 * Substitute t -> t^2 along basis direction idx of a target lattice: the
 * exponent d becomes the vector 2d * e_idx. This is how a knot polynomial
 * enters a manifold's group ring with the torus class as variable.
 */
inline LaurentElem alexander_sub_square(const FiberedKnot& k, const LatticePtr& target, int idx) {
    if (idx < 0 || idx >= target->rank())
        throw CalcError("alexander_sub_square: index out of range");
    LaurentElem out(target);
    for (const auto& [e, c] : k.alexander.terms()) {
        ClassVec exp(target->rank(), Int(0));
        exp[idx] = 2 * e[0];
        out.add_term(exp, c);
    }
    return out;
}

/** Delta_K(t^2) with t the monomial of an arbitrary class, not a basis unit. */
inline LaurentElem alexander_sub_square(const FiberedKnot& k, const LatticePtr& target,
                                        const ClassVec& base) {
    if (static_cast<int>(base.size()) != target->rank())
        throw CalcError("alexander_sub_square: base class has wrong dimension");
    LaurentElem out(target);
    for (const auto& [e, c] : k.alexander.terms()) {
        ClassVec exp(target->rank(), Int(0));
        for (int i = 0; i < target->rank(); ++i) exp[i] = 2 * e[0] * base[i];
        out.add_term(exp, c);
    }
    return out;
}

}  // namespace swcalc
