#pragma once

#include <algorithm>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "swcalc/ints.hpp"

namespace swcalc {

// Integer coefficient vector relative to a lattice basis.
using ClassVec = std::vector<Int>;

inline ClassVec vec_add(const ClassVec& a, const ClassVec& b) {
    if (a.size() != b.size()) throw CalcError("vec_add: dimension mismatch");
    ClassVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline ClassVec vec_neg(const ClassVec& a) {
    ClassVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline ClassVec vec_scale(const Int& c, const ClassVec& a) {
    ClassVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool vec_is_zero(const ClassVec& a) {
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

/**
 * Finite-rank lattice with a symmetric integer pairing, given by a Gram
 * matrix in a named basis. Records track only the homology classes a
 * construction actually reasons about, so ranks stay small.
 */
class IntLattice {
  public:
    IntLattice(std::vector<std::string> basis, std::vector<std::vector<Int>> gram)
        : _basis(std::move(basis)), _gram(std::move(gram)) {
        validate();
    }

    int rank() const { return static_cast<int>(_basis.size()); }
    const std::vector<std::string>& basis() const { return _basis; }
    const std::vector<std::vector<Int>>& gram() const { return _gram; }

    int index_of(const std::string& name) const {
        for (size_t i = 0; i < _basis.size(); ++i)
            if (_basis[i] == name) return static_cast<int>(i);
        return -1;
    }

    ClassVec unit(int i) const {
        if (i < 0 || i >= rank()) throw CalcError("IntLattice::unit: index out of range");
        ClassVec v(rank(), Int(0));
        v[i] = 1;
        return v;
    }

    Int pair(const ClassVec& a, const ClassVec& b) const {
        if (static_cast<int>(a.size()) != rank() || static_cast<int>(b.size()) != rank())
            throw CalcError("IntLattice::pair: vector dimension does not match rank");
        Int s = 0;
        for (int i = 0; i < rank(); ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < rank(); ++j) {
                if (b[j] == 0) continue;
                s += a[i] * _gram[i][j] * b[j];
            }
        }
        return s;
    }

    Int square(const ClassVec& a) const { return pair(a, a); }

    // A lattice is even when every vector has even square; it suffices to
    // check the Gram diagonal.
    bool is_even() const {
        for (int i = 0; i < rank(); ++i)
            if (_gram[i][i] % 2 != 0) return false;
        return true;
    }

    bool operator==(const IntLattice& o) const {
        return _basis == o._basis && _gram == o._gram;
    }

  private:
    void validate() const {
        const size_t n = _basis.size();
        if (_gram.size() != n) throw CalcError("IntLattice: Gram matrix is not rank x rank");
        std::set<std::string> seen;
        for (const auto& name : _basis) {
            if (name.empty()) throw CalcError("IntLattice: empty basis name");
            if (!seen.insert(name).second)
                throw CalcError("IntLattice: duplicate basis name '" + name + "'");
        }
        for (size_t i = 0; i < n; ++i) {
            if (_gram[i].size() != n)
                throw CalcError("IntLattice: Gram matrix is not rank x rank");
            for (size_t j = 0; j < i; ++j)
                if (_gram[i][j] != _gram[j][i])
                    throw CalcError("IntLattice: Gram matrix must be symmetric");
        }
    }

    std::vector<std::string> _basis;
    std::vector<std::vector<Int>> _gram;
};

using LatticePtr = std::shared_ptr<const IntLattice>;

inline LatticePtr make_lattice(std::vector<std::string> basis,
                               std::vector<std::vector<Int>> gram) {
    return std::make_shared<const IntLattice>(std::move(basis), std::move(gram));
}

inline bool same_lattice(const LatticePtr& a, const LatticePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

inline std::string vec_str(const ClassVec& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << "]";
    return os.str();
}

}  // namespace swcalc
