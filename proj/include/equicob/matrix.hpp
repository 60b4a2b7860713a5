#pragma once

#include <vector>

#include "equicob/bigint.hpp"
#include "equicob/errors.hpp"

namespace equicob {

// Small dense integer matrix, row major.
using IntMatrix = std::vector<std::vector<Int>>;

IntMatrix identity_matrix(int n);
IntMatrix matrix_multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix matrix_transpose(const IntMatrix& a);
LatticeVector matrix_apply(const IntMatrix& a, const LatticeVector& v);

// Exact determinant via fraction-free (Bareiss) elimination.
Int determinant(IntMatrix m);

bool is_square(const IntMatrix& a);
bool is_identity(const IntMatrix& a);

// True iff every row and every column has exactly one entry in {+1,-1} and
// zeros elsewhere; over the integers this is equivalent to A*A^T = I.
bool is_signed_permutation(const IntMatrix& a);

// Inverse of a matrix with determinant +-1 (integral by the adjugate
// formula). Throws SingularMatrix otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);

}  // namespace equicob
