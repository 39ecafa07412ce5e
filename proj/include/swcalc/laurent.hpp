#pragma once

#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "swcalc/lattice.hpp"

namespace swcalc {

// Exponent vectors are ordered descending-lexicographically so iteration and
// the canonical text form agree: highest power first.
struct LexDesc {
    bool operator()(const ClassVec& a, const ClassVec& b) const {
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

/**
 * Element of the integral group ring of a lattice: a finite Laurent
 * combination sum c_k * t^k with k a lattice vector. All arithmetic is exact;
 * zero coefficients are never stored.
 */
class LaurentElem {
  public:
    using TermMap = std::map<ClassVec, Int, LexDesc>;

    explicit LaurentElem(LatticePtr lat) : _lat(std::move(lat)) {
        if (!_lat) throw CalcError("LaurentElem: null lattice");
    }

    static LaurentElem zero(LatticePtr lat) { return LaurentElem(std::move(lat)); }

    static LaurentElem monomial(LatticePtr lat, const ClassVec& exp, const Int& coeff) {
        LaurentElem e(std::move(lat));
        e.add_term(exp, coeff);
        return e;
    }

    static LaurentElem constant(LatticePtr lat, const Int& c) {
        const int r = lat->rank();
        return monomial(std::move(lat), ClassVec(r, Int(0)), c);
    }

    const LatticePtr& lattice() const { return _lat; }
    const TermMap& terms() const { return _terms; }
    bool is_zero() const { return _terms.empty(); }
    size_t term_count() const { return _terms.size(); }

    Int coeff(const ClassVec& exp) const {
        auto it = _terms.find(exp);
        return it == _terms.end() ? Int(0) : it->second;
    }

    void add_term(const ClassVec& exp, const Int& coeff) {
        if (static_cast<int>(exp.size()) != _lat->rank())
            throw CalcError("LaurentElem: exponent dimension does not match lattice rank");
        if (coeff == 0) return;
        auto [it, inserted] = _terms.emplace(exp, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) _terms.erase(it);
        }
    }

    // Sum of all coefficients, i.e. evaluation with every variable set to 1.
    Int eval_at_one() const {
        Int s = 0;
        for (const auto& [e, c] : _terms) s += c;
        return s;
    }

    LaurentElem& operator+=(const LaurentElem& o) {
        require_compatible(o);
        for (const auto& [e, c] : o._terms) add_term(e, c);
        return *this;
    }

    LaurentElem& operator-=(const LaurentElem& o) {
        require_compatible(o);
        for (const auto& [e, c] : o._terms) add_term(e, -c);
        return *this;
    }

    friend LaurentElem operator+(LaurentElem a, const LaurentElem& b) { return a += b; }
    friend LaurentElem operator-(LaurentElem a, const LaurentElem& b) { return a -= b; }

    LaurentElem operator-() const {
        LaurentElem r(_lat);
        for (const auto& [e, c] : _terms) r._terms.emplace(e, -c);
        return r;
    }

    friend LaurentElem operator*(const Int& c, const LaurentElem& a) {
        LaurentElem r(a._lat);
        if (c == 0) return r;
        for (const auto& [e, k] : a._terms) r._terms.emplace(e, c * k);
        return r;
    }

    bool operator==(const LaurentElem& o) const {
        return same_lattice(_lat, o._lat) && _terms == o._terms;
    }

    // Canonical text form: terms in descending lex order of exponents,
    // e.g. "1*t[2,0] - 2*t[0,0] + 1*t[-2,0]"; the zero element prints as "0".
    std::string str() const {
        if (_terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : _terms) {
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            os << abs_int(c) << "*t" << vec_str(e);
        }
        return os.str();
    }

    void require_compatible(const LaurentElem& o) const {
        if (!same_lattice(_lat, o._lat))
            throw CalcError("LaurentElem: lattice mismatch");
    }

  private:
    LatticePtr _lat;
    TermMap _terms;
};

// Exact convolution product.
inline LaurentElem laurent_mul(const LaurentElem& a, const LaurentElem& b) {
    a.require_compatible(b);
    LaurentElem r(a.lattice());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms())
            r.add_term(vec_add(ea, eb), ca * cb);
    return r;
}

// Conjugation t^k -> t^(-k). An involution and a ring homomorphism.
inline LaurentElem laurent_bar(const LaurentElem& a) {
    LaurentElem r(a.lattice());
    for (const auto& [e, c] : a.terms()) r.add_term(vec_neg(e), c);
    return r;
}

// Largest value of <exp, s> over the support; meaningless for zero input.
inline Int max_pairing(const LaurentElem& a, const ClassVec& s) {
    if (a.is_zero()) throw CalcError("max_pairing: zero element has no support");
    bool first = true;
    Int best = 0;
    for (const auto& [e, c] : a.terms()) {
        Int v = a.lattice()->pair(e, s);
        if (first || v > best) best = v;
        first = false;
    }
    return best;
}

// Terms whose pairing with s equals v, as (exponent, coefficient) pairs in
// canonical order.
inline std::vector<std::pair<ClassVec, Int>> terms_with_pairing(const LaurentElem& a,
                                                                const ClassVec& s,
                                                                const Int& v) {
    std::vector<std::pair<ClassVec, Int>> out;
    for (const auto& [e, c] : a.terms())
        if (a.lattice()->pair(e, s) == v) out.emplace_back(e, c);
    return out;
}

}  // namespace swcalc
