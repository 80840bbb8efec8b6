#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace helberg {

/// Arbitrary-precision signed integer. The weights grow like (pd)^i, so
/// moments overflow 64-bit machine words well before n = 40.
using Int = boost::multiprecision::cpp_int;

/// Mathematical remainder: result lies in [0, m) for m > 0 even when a < 0.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) {
        r += m;
    }
    return r;
}

}  // namespace helberg
