#pragma once

// Test-side oracle: Alexander polynomials of torus knots computed from a
// Seifert matrix of the fiber surface of the positive braid
// (s_1 s_2 ... s_{p-1})^q, evaluated as det(V - t V^T) and symmetrized.
// Deliberately independent of the production quotient formula; only the Int
// type is shared. Never included by production code.

#include <map>
#include <vector>

#include "swcalc/ints.hpp"

namespace oracle {

using swcalc::Int;

// -- dense integer polynomials, ascending coefficients ---------------------

using OPoly = std::vector<Int>;

inline void otrim(OPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline OPoly omul(const OPoly& a, const OPoly& b) {
    if (a.empty() || b.empty()) return {};
    OPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    otrim(r);
    return r;
}

inline OPoly osub(OPoly a, const OPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    otrim(a);
    return a;
}

inline OPoly odiv_exact(OPoly num, const OPoly& den) {
    otrim(num);
    if (den.empty()) throw std::runtime_error("oracle: division by zero poly");
    if (num.empty()) return {};
    if (num.size() < den.size()) throw std::runtime_error("oracle: inexact poly division");
    OPoly q(num.size() - den.size() + 1, Int(0));
    for (size_t i = q.size(); i-- > 0;) {
        Int c = num[i + den.size() - 1];
        if (c % den.back() != 0) throw std::runtime_error("oracle: inexact poly division");
        c /= den.back();
        q[i] = c;
        for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (const Int& c : num)
        if (c != 0) throw std::runtime_error("oracle: nonzero remainder");
    return q;
}

// -- Seifert matrix of a positive braid closure ----------------------------

// Basis loops of the braided fiber surface: one loop per pair of consecutive
// occurrences of the same generator. With L the loop on the lower of two
// adjacent generators and H the loop on the higher, the linking form is
//   lk(x, x+)  = -1 for every loop
//   lk(x, y+)  =  1 when y is the successor of x on the same generator
//                (shared band)
//   lk(L, H+)  =  1 when the spans interleave with L starting first
//   lk(L, H+)  = -1 when the spans interleave with H starting first
//   0 otherwise (disjoint or nested spans, generators further apart).
// The entries insensitive to small examples (which slot of an interleaved
// pair carries the linking, and its sign) were pinned against hand-expanded
// polynomials for two- to five-strand words in both interleave directions.
struct Loop {
    int gen;   // generator index i of s_i
    int from;  // word position of the first band
    int to;    // word position of the second band
};

inline std::vector<std::vector<Int>> seifert_matrix_positive_braid(const std::vector<int>& word) {
    std::map<int, std::vector<int>> occ;
    for (size_t pos = 0; pos < word.size(); ++pos) occ[word[pos]].push_back(static_cast<int>(pos));

    std::vector<Loop> loops;
    for (const auto& [gen, positions] : occ)
        for (size_t k = 0; k + 1 < positions.size(); ++k)
            loops.push_back({gen, positions[k], positions[k + 1]});

    const size_t n = loops.size();
    std::vector<std::vector<Int>> v(n, std::vector<Int>(n, Int(0)));
    for (size_t x = 0; x < n; ++x) {
        v[x][x] = -1;
        for (size_t y = 0; y < n; ++y) {
            if (x == y) continue;
            const Loop &a = loops[x], &b = loops[y];
            if (a.gen == b.gen) {
                if (a.to == b.from) v[x][y] = 1;  // successor on the shared band
            } else if (a.gen + 1 == b.gen) {
                // x on the lower generator, y on the higher; row x carries
                // the linking for interleaved spans in either start order
                if (a.from < b.from && b.from < a.to && a.to < b.to) v[x][y] = 1;
                if (b.from < a.from && a.from < b.to && b.to < a.to) v[x][y] = -1;
            }
        }
    }
    return v;
}

// -- exact determinant of a matrix over Z[t] (fraction-free) ---------------

inline OPoly poly_det(std::vector<std::vector<OPoly>> a) {
    const size_t n = a.size();
    if (n == 0) return {Int(1)};
    OPoly prev = {Int(1)};
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].empty()) {
            size_t p = k + 1;
            while (p < n && a[p][k].empty()) ++p;
            if (p == n) return {};
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = odiv_exact(osub(omul(a[i][j], a[k][k]), omul(a[i][k], a[k][j])), prev);
        prev = a[k][k];
    }
    OPoly d = a[n - 1][n - 1];
    if (sign < 0)
        for (Int& c : d) c = -c;
    return d;
}

// -- the oracle -------------------------------------------------------------

// Symmetrized Alexander coefficients of the (p,q) torus knot, returned as a
// map exponent -> coefficient, normalized so the value at t = 1 is +1.
inline std::map<long, Int> alexander_oracle(int p, int q) {
    std::vector<int> word;
    for (int rep = 0; rep < q; ++rep)
        for (int i = 1; i < p; ++i) word.push_back(i);

    auto v = seifert_matrix_positive_braid(word);
    const size_t n = v.size();

    // V - t V^T entry by entry, each a degree <= 1 polynomial
    std::vector<std::vector<OPoly>> m(n, std::vector<OPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            OPoly e = {v[i][j], -v[j][i]};
            otrim(e);
            m[i][j] = e;
        }

    OPoly det = poly_det(m);
    otrim(det);
    if (det.empty()) throw std::runtime_error("oracle: vanishing determinant");

    // strip the power of t, then recentre
    size_t val = 0;
    while (det[val] == 0) ++val;
    OPoly core(det.begin() + val, det.end());
    if ((core.size() - 1) % 2 != 0) throw std::runtime_error("oracle: odd degree span");
    long half = static_cast<long>(core.size() - 1) / 2;

    Int at1 = 0;
    for (const Int& c : core) at1 += c;
    if (at1 != 1 && at1 != -1) throw std::runtime_error("oracle: determinant not a unit at t=1");

    std::map<long, Int> out;
    for (size_t d = 0; d < core.size(); ++d)
        if (core[d] != 0) out[static_cast<long>(d) - half] = (at1 < 0) ? Int(-core[d]) : core[d];
    return out;
}

}  // namespace oracle
