#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "kernel.hpp"
#include "manifold.hpp"

namespace swcalc {

/**
 * An adjunction-plus-simple-type enumeration problem: a tracked lattice, the
 * constraint surfaces living in it, and the characteristic numbers that fix
 * the square every candidate class must have. The scenario is decoupled from
 * any particular record so surface systems can be posed and perturbed freely.
 */
struct AdjunctionScenario {
    std::string name;
    LatticePtr lattice;
    std::vector<TrackedSurface> surfaces;
    Int e = 0;
    Int sign = 0;
};

/**
 * Outcome of the enumeration. Either an essential sphere (or an outright
 * impossible adjunction bound) forces the invariant to vanish, or the finite
 * list of classes satisfying every constraint is returned, sorted and closed
 * under negation. Surfaces the adjunction inequality does not cover are
 * skipped and reported in `warnings`.
 */
struct CandidateResult {
    bool vanishes = false;
    std::string reason;
    std::vector<ClassVec> classes;
    std::vector<std::string> warnings;
};

namespace detail {

/** Pairing functional of a class, as a row vector over the basis. */
inline ClassVec pairing_row(const LatticePtr& lat, const ClassVec& cls) {
    ClassVec row(lat->rank(), Int(0));
    for (int i = 0; i < lat->rank(); ++i) row[i] = lat->pair(lat->unit(i), cls);
    return row;
}

/** Indices of a maximal linearly independent subset of rows, by fraction-free elimination. */
inline std::vector<size_t> independent_rows(const IntMatrix& rows) {
    std::vector<size_t> picked;
    if (rows.empty()) return picked;
    size_t cols = rows[0].size();
    IntMatrix ech;  // echelon rows built so far
    for (size_t r = 0; r < rows.size(); ++r) {
        ClassVec v = rows[r];
        for (const auto& e : ech) {
            size_t p = 0;
            while (p < cols && e[p] == 0) ++p;
            if (p == cols || v[p] == 0) continue;
            Int a = e[p], b = v[p];
            for (size_t c = 0; c < cols; ++c) v[c] = a * v[c] - b * e[c];
        }
        bool nonzero = false;
        for (const auto& x : v) nonzero = nonzero || x != 0;
        if (nonzero) {
            ech.push_back(std::move(v));
            picked.push_back(r);
        }
    }
    return picked;
}

inline void enumerate_box(const std::vector<Int>& radii, size_t i, ClassVec& y,
                          const std::function<void(const ClassVec&)>& visit) {
    if (i == radii.size()) {
        visit(y);
        return;
    }
    for (Int v = -radii[i]; v <= radii[i]; ++v) {
        y[i] = v;
        enumerate_box(radii, i + 1, y, visit);
    }
}

}  // namespace detail

/**
 * Solve an adjunction scenario.
 *
 * (1) An essential sphere of non-negative square forces the invariant to
 *     vanish, as does any surface whose adjunction bound is negative.
 * (2) Surfaces whose bound 2h - 2 - [S]^2 is zero contribute equality
 *     constraints k . [S] = 0, solved over the integers.
 * (3) The remaining bounds must cut a finite region out of the solution
 *     sublattice; otherwise the scenario is rejected as unbounded rather
 *     than silently truncated.
 * (4) Lattice points of the region are enumerated and filtered by the
 *     simple-type equality k^2 = 2e + 3 sign.
 */
inline CandidateResult enumerate_candidates(const AdjunctionScenario& s) {
    if (!s.lattice) throw CalcError(s.name + ": scenario has no lattice");
    const LatticePtr& lat = s.lattice;
    CandidateResult out;

    for (const auto& sur : s.surfaces) {
        if (sur.cls.size() != static_cast<size_t>(lat->rank()))
            throw CalcError(s.name + ": surface " + sur.label + " has wrong dimension");
        if (lat->square(sur.cls) != sur.self_int)
            throw CalcError(s.name + ": surface " + sur.label +
                            " self-intersection disagrees with the Gram matrix");
        if (sur.genus < 0)
            throw CalcError(s.name + ": surface " + sur.label + " has negative genus");
    }

    std::vector<const TrackedSurface*> constraints;
    for (const auto& sur : s.surfaces) {
        if (sur.genus == 0) {
            if (sur.self_int >= 0 && sur.essential) {
                out.vanishes = true;
                out.reason = "essential sphere " + sur.label + " of square " +
                             int_str(sur.self_int) + " forces a vanishing invariant";
                return out;
            }
            out.warnings.push_back("sphere " + sur.label + " carries no adjunction constraint");
            continue;
        }
        if (!sur.essential) {
            out.warnings.push_back("surface " + sur.label + " is not essential; skipped");
            continue;
        }
        if (sur.self_int < 0) {
            out.warnings.push_back("surface " + sur.label +
                                   " has negative square; adjunction not applied");
            continue;
        }
        if (2 * sur.genus - 2 - sur.self_int < 0) {
            out.vanishes = true;
            out.reason = "surface " + sur.label + " violates the adjunction inequality for " +
                         "every class, so no basic class exists";
            return out;
        }
        constraints.push_back(&sur);
    }

    // Step 2: equality constraints span the solution sublattice.
    IntMatrix eq_rows;
    for (const auto* sur : constraints)
        if (2 * sur->genus - 2 - sur->self_int == 0)
            eq_rows.push_back(detail::pairing_row(lat, sur->cls));

    std::vector<ClassVec> basis;
    if (eq_rows.empty()) {
        for (int i = 0; i < lat->rank(); ++i) basis.push_back(lat->unit(i));
    } else {
        basis = integer_kernel(eq_rows);
    }
    size_t dim = basis.size();
    if (dim == 0) {
        // Only the zero class survives; keep it iff its square matches.
        if (2 * s.e + 3 * s.sign == 0) out.classes.push_back(ClassVec(lat->rank(), Int(0)));
        return out;
    }

    // Step 3: inequality functionals restricted to the sublattice.
    IntMatrix ineq;
    std::vector<Int> bounds;
    for (const auto* sur : constraints) {
        Int b = 2 * sur->genus - 2 - sur->self_int;
        if (b == 0) continue;
        ClassVec row(dim, Int(0));
        for (size_t j = 0; j < dim; ++j) row[j] = lat->pair(basis[j], sur->cls);
        ineq.push_back(std::move(row));
        bounds.push_back(b);
    }
    std::vector<size_t> free_rows = detail::independent_rows(ineq);
    if (free_rows.size() < dim)
        throw CalcError(s.name + ": unbounded candidate region, the surfaces constrain only " +
                        std::to_string(free_rows.size()) + " of " + std::to_string(dim) +
                        " directions");

    // A full-rank square subsystem |C y| <= b yields the outer box
    // |y_i| <= sum_j |adj(C)_ij| b_j / |det C|.
    IntMatrix csub;
    std::vector<Int> bsub;
    for (size_t r : free_rows) {
        if (csub.size() == dim) break;
        csub.push_back(ineq[r]);
        bsub.push_back(bounds[r]);
    }
    Int det = integer_det(csub);
    IntMatrix adj = adjugate_matrix(csub);
    std::vector<Int> radii(dim, Int(0));
    for (size_t i = 0; i < dim; ++i) {
        Int acc = 0;
        for (size_t j = 0; j < dim; ++j) acc += abs_int(adj[i][j]) * bsub[j];
        radii[i] = acc / abs_int(det);
    }

    // Step 4: enumerate and filter.
    Int want = 2 * s.e + 3 * s.sign;
    ClassVec y(dim, Int(0));
    detail::enumerate_box(radii, 0, y, [&](const ClassVec& yy) {
        for (size_t r = 0; r < ineq.size(); ++r) {
            Int v = 0;
            for (size_t j = 0; j < dim; ++j) v += ineq[r][j] * yy[j];
            if (abs_int(v) > bounds[r]) return;
        }
        ClassVec k(lat->rank(), Int(0));
        for (size_t j = 0; j < dim; ++j)
            for (int i = 0; i < lat->rank(); ++i) k[i] += yy[j] * basis[j][i];
        if (lat->square(k) != want) return;
        out.classes.push_back(std::move(k));
    });

    std::sort(out.classes.begin(), out.classes.end());
    for (const auto& k : out.classes)
        if (!std::binary_search(out.classes.begin(), out.classes.end(), vec_neg(k)))
            throw CalcError(s.name + ": candidate set is not closed under negation");
    return out;
}

/**
 * The derivation setting for the chain piece with n >= 2 segments and fiber
 * genus g: basis {tau, Sigma, R_1.., V_1..} per junction, with the rim and
 * vanishing classes interlocking through the chain intersection numbers.
 * The rim-vanishing block of each junction has determinant one, which is
 * asserted at construction.
 */
inline AdjunctionScenario scenario_Yng(int n, int g) {
    if (n < 2) throw CalcError("scenario_Yng: need at least two pieces");
    if (g < 1) throw CalcError("scenario_Yng: fiber genus must be at least 1");
    int junctions = n - 1;
    int rk = 2 + 4 * g * junctions;

    std::vector<std::string> names{"tau", "Sigma"};
    for (int j = 1; j <= junctions; ++j) {
        for (int i = 1; i <= 2 * g; ++i)
            names.push_back("R" + std::to_string(j) + "_" + std::to_string(i));
        for (int i = 1; i <= 2 * g; ++i)
            names.push_back("V" + std::to_string(j) + "_" + std::to_string(i));
    }
    std::vector<std::vector<Int>> gram(rk, std::vector<Int>(rk, Int(0)));
    gram[0][1] = gram[1][0] = 1;
    for (int j = 0; j < junctions; ++j) {
        int rbase = 2 + 4 * g * j;
        int vbase = rbase + 2 * g;
        for (int i = 0; i < 2 * g; ++i) {
            gram[vbase + i][vbase + i] = 2;
            // R_{i+1} . V_i = a_i . a_{i+1} = 1 and R_{i-1} . V_i = -1.
            if (i + 1 < 2 * g) {
                gram[rbase + i + 1][vbase + i] = 1;
                gram[vbase + i][rbase + i + 1] = 1;
            }
            if (i - 1 >= 0) {
                gram[rbase + i - 1][vbase + i] = -1;
                gram[vbase + i][rbase + i - 1] = -1;
            }
        }
    }

    AdjunctionScenario s;
    s.name = "Y(" + std::to_string(n) + "," + std::to_string(g) + ") scenario";
    s.lattice = make_lattice(std::move(names), std::move(gram));
    s.e = Int(n - 1) * (4 * g - 4);
    s.sign = 0;
    s.surfaces.push_back({"tau", s.lattice->unit(0), Int(n), Int(0), true, false, false});
    s.surfaces.push_back({"Sigma", s.lattice->unit(1), Int(g), Int(0), true, false, false});
    for (int j = 0; j < junctions; ++j) {
        int rbase = 2 + 4 * g * j;
        for (int i = 0; i < 2 * g; ++i)
            s.surfaces.push_back({s.lattice->basis()[rbase + i], s.lattice->unit(rbase + i),
                                  Int(1), Int(0), true, false, false});
        for (int i = 0; i < 2 * g; ++i)
            s.surfaces.push_back({s.lattice->basis()[rbase + 2 * g + i],
                                  s.lattice->unit(rbase + 2 * g + i), Int(2), Int(2), true, false,
                                  false});
    }

    for (int j = 0; j < junctions; ++j) {
        int rbase = 2 + 4 * g * j;
        IntMatrix block(4 * g, ClassVec(4 * g, Int(0)));
        for (int a = 0; a < 4 * g; ++a)
            for (int b = 0; b < 4 * g; ++b)
                block[a][b] = s.lattice->gram()[rbase + a][rbase + b];
        if (integer_det(block) != 1)
            throw CalcError(s.name + ": rim-vanishing block is not unimodular");
    }
    return s;
}

inline AdjunctionScenario scenario_Y2g(int g) { return scenario_Yng(2, g); }

/**
 * The vanishing scenario for the surgered parallel-fiber piece: the chain
 * lattice of Y'(g; k_1..k_r) plus the capped Seifert surface Gamma of genus
 * g-1. Gamma pairs once with the section and not at all with the fiber, so
 * inside the tracked lattice its constraint functional is the fiber class;
 * its genus drop by one is what empties the candidate set. For g = 1 it is
 * an essential sphere.
 */
inline AdjunctionScenario scenario_Yprime_neg1(int g, const std::vector<int>& lengths) {
    if (g < 1) throw CalcError("scenario_Yprime_neg1: fiber genus must be at least 1");
    if (lengths.empty()) throw CalcError("scenario_Yprime_neg1: need at least one chain length");
    int ksum = 0;
    for (int k : lengths) {
        if (k < 1) throw CalcError("scenario_Yprime_neg1: chain lengths must be positive");
        ksum += k;
    }

    std::vector<std::string> names{"Sprime", "Sigma"};
    for (size_t t = 0; t < lengths.size(); ++t) {
        for (int j = 1; j <= g - 1; ++j) {
            for (int i = 1; i <= 2 * lengths[t]; ++i)
                names.push_back("R" + std::to_string(t + 1) + "_" + std::to_string(j) + "_" +
                                std::to_string(i));
            for (int i = 1; i <= 2 * lengths[t]; ++i)
                names.push_back("V" + std::to_string(t + 1) + "_" + std::to_string(j) + "_" +
                                std::to_string(i));
        }
    }
    int rk = static_cast<int>(names.size());
    std::vector<std::vector<Int>> gram(rk, std::vector<Int>(rk, Int(0)));
    gram[0][1] = gram[1][0] = 1;
    int base = 2;
    std::vector<std::pair<int, int>> blocks;
    for (size_t t = 0; t < lengths.size(); ++t) {
        int len = 2 * lengths[t];
        for (int j = 1; j <= g - 1; ++j) {
            blocks.emplace_back(base, len);
            for (int i = 0; i < len; ++i) {
                gram[base + len + i][base + len + i] = 2;
                if (i + 1 < len) {
                    gram[base + i + 1][base + len + i] = 1;
                    gram[base + len + i][base + i + 1] = 1;
                }
                if (i - 1 >= 0) {
                    gram[base + i - 1][base + len + i] = -1;
                    gram[base + len + i][base + i - 1] = -1;
                }
            }
            base += 2 * len;
        }
    }

    AdjunctionScenario s;
    s.name = "Y'(" + std::to_string(g) + ") surgered scenario";
    s.lattice = make_lattice(std::move(names), std::move(gram));
    s.e = Int(4) * (g - 1) * ksum;
    s.sign = 0;
    s.surfaces.push_back(
        {"Sprime", s.lattice->unit(0), Int(1 + ksum), Int(0), true, false, false});
    s.surfaces.push_back({"Sigma", s.lattice->unit(1), Int(g), Int(0), true, false, false});
    // The capped Seifert surface: same pairings as the fiber, one genus less.
    s.surfaces.push_back({"Gamma", s.lattice->unit(1), Int(g - 1), Int(0), true, false, false});
    for (auto [b, len] : blocks) {
        for (int i = 0; i < len; ++i)
            s.surfaces.push_back({s.lattice->basis()[b + i], s.lattice->unit(b + i), Int(1),
                                  Int(0), true, false, false});
        for (int i = 0; i < len; ++i)
            s.surfaces.push_back({s.lattice->basis()[b + len + i], s.lattice->unit(b + len + i),
                                  Int(2), Int(2), true, false, false});
    }
    return s;
}

}  // namespace swcalc
