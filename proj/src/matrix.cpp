#include "equicob/matrix.hpp"

#include <cstddef>

namespace equicob {

IntMatrix identity_matrix(int n) {
    IntMatrix m(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return m;
}

bool is_square(const IntMatrix& a) {
    const std::size_t n = a.size();
    for (const auto& row : a) {
        if (row.size() != n) return false;
    }
    return true;
}

IntMatrix matrix_multiply(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size();
    const std::size_t k = b.size();
    if (k == 0 || (n > 0 && a[0].size() != k))
        throw RankMismatch("matrix product dimension mismatch");
    const std::size_t m = b[0].size();
    IntMatrix r(n, std::vector<Int>(m, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    }
    return r;
}

IntMatrix matrix_transpose(const IntMatrix& a) {
    if (a.empty()) return a;
    IntMatrix r(a[0].size(), std::vector<Int>(a.size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
    }
    return r;
}

LatticeVector matrix_apply(const IntMatrix& a, const LatticeVector& v) {
    LatticeVector r(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != v.size()) throw RankMismatch("matrix/vector dimension mismatch");
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    }
    return r;
}

Int determinant(IntMatrix m) {
    if (!is_square(m)) throw RankMismatch("determinant of a non-square matrix");
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    Int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r) {
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return 0;
        if (pivot != k) {
            std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(k)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            auto& mi = m[static_cast<std::size_t>(i)];
            const auto& mk = m[static_cast<std::size_t>(k)];
            for (int j = k + 1; j < n; ++j) {
                // Bareiss: exact integer division by the previous pivot.
                mi[static_cast<std::size_t>(j)] =
                    (mi[static_cast<std::size_t>(j)] * mk[static_cast<std::size_t>(k)] -
                     mi[static_cast<std::size_t>(k)] * mk[static_cast<std::size_t>(j)]) /
                    prev;
            }
            mi[static_cast<std::size_t>(k)] = 0;
        }
        prev = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    return sign * m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
}

bool is_identity(const IntMatrix& a) {
    if (!is_square(a)) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (a[i][j] != (i == j ? 1 : 0)) return false;
        }
    }
    return true;
}

bool is_signed_permutation(const IntMatrix& a) {
    if (!is_square(a)) return false;
    const std::size_t n = a.size();
    std::vector<int> column_hits(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        int row_hits = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const Int& e = a[i][j];
            if (e == 0) continue;
            if (e != 1 && e != -1) return false;
            ++row_hits;
            ++column_hits[j];
        }
        if (row_hits != 1) return false;
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (column_hits[j] != 1) return false;
    }
    return true;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
    if (!is_square(a)) throw RankMismatch("inverse of a non-square matrix");
    const std::size_t n = a.size();
    const Int det = determinant(a);
    if (det != 1 && det != -1)
        throw SingularMatrix("matrix is not unimodular (det = " + det.str() + ")");
    if (n == 1) return {{det}};
    IntMatrix inv(n, std::vector<Int>(n, 0));
    IntMatrix minor(n - 1, std::vector<Int>(n - 1, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t r = 0, mr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor[mr][mc] = a[r][c];
                    ++mc;
                }
                ++mr;
            }
            Int cof = determinant(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            // adj(a)[j][i] = cofactor(i, j); inverse = adj / det = adj * det.
            inv[j][i] = cof * det;
        }
    }
    return inv;
}

}  // namespace equicob
