#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace swcalc {

// Every quantity in the engine is an exact integer; nothing here ever touches
// floating point. cpp_int keeps intermediate values (fraction-free pivots,
// convolution coefficients) exact no matter how they grow.
using Int = boost::multiprecision::cpp_int;

struct CalcError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

inline std::string int_str(const Int& v) { return v.str(); }

// Floor division that is exact for the callers' use (b != 0).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace swcalc
