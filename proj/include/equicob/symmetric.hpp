#pragma once

#include <vector>

#include "equicob/bigint.hpp"
#include "equicob/polynomial.hpp"

namespace equicob {

// Elementary symmetric polynomials of the degree-1 forms determined by n
// weight vectors of rank n. Returns all of e_1..e_n in one pass.
// Throws ArityMismatch unless the weight count equals every vector's length.
std::vector<Polynomial> elementary_symmetric_all(const std::vector<LatticeVector>& weights);

// e_j alone, 1 <= j <= n.
Polynomial elementary_symmetric(const std::vector<LatticeVector>& weights, int j);

// Sum of squares of the weight forms; satisfies p_2 = e_1^2 - 2*e_2
// identically (Newton's identity).
Polynomial power_sum_2(const std::vector<LatticeVector>& weights);

}  // namespace equicob
