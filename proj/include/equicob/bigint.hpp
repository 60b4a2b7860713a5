#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace equicob {

// Exact arbitrary-precision integers and rationals. All coefficient and
// weight arithmetic in this project is exact; rationals appear only inside
// division routines.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// An integer vector in Z^n, e.g. a single tangent weight expressed in a
// fixed basis of the degree-2 lattice.
using LatticeVector = std::vector<Int>;

inline bool is_zero_vector(const LatticeVector& v) {
    for (const Int& e : v) {
        if (e != 0) return false;
    }
    return true;
}

}  // namespace equicob
