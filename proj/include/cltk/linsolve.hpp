#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace cltk {

// ---------------------------------------------------------------------------
// Fraction-free (Bareiss) elimination.
//
// Rows are first scaled to integers; the elimination then stays in integers,
// with every division exact.  Used for ranks/determinants of the dense
// systems that are too irregular for the structured solver, and as an
// independent cross-check of that solver in the test suite.
// ---------------------------------------------------------------------------

struct BareissResult {
    int rank = 0;
    Rat det = 0; // meaningful for square input only
};

inline BareissResult bareiss_eliminate(const Mat& A) {
    const int n = A.rows(), m = A.cols();
    std::vector<std::vector<Int>> M(n, std::vector<Int>(m));
    Rat det_scale(1); // product of the factors the rows were multiplied by
    for (int i = 0; i < n; ++i) {
        Int l(1);
        for (int j = 0; j < m; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), A(i, j).get_den().get_mpz_t());
        for (int j = 0; j < m; ++j) {
            Rat v = A(i, j) * Rat(l);
            M[i][j] = v.get_num(); // denominator is 1 by construction
        }
        det_scale *= Rat(l);
    }

    Int prev(1);
    int sign = 1;
    int row = 0;
    for (int col = 0; col < m && row < n; ++col) {
        int piv = -1;
        for (int i = row; i < n; ++i)
            if (M[i][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row) { std::swap(M[piv], M[row]); sign = -sign; }
        for (int i = row + 1; i < n; ++i) {
            for (int j = col + 1; j < m; ++j) {
                Int t = M[row][col] * M[i][j] - M[i][col] * M[row][j];
                mpz_divexact(M[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            M[i][col] = 0;
        }
        prev = M[row][col];
        ++row;
    }

    BareissResult res;
    res.rank = row;
    if (n == m) {
        if (row < n)
            res.det = 0;
        else
            res.det = Rat(sign) * Rat(prev) / det_scale;
    }
    return res;
}

// ---------------------------------------------------------------------------
// Rational Gauss-Jordan utilities.  Pivoting is "first nonzero", which is
// deterministic and safe in exact arithmetic.
// ---------------------------------------------------------------------------

// Reduce A in place to reduced row echelon form; returns the pivot columns.
inline std::vector<int> rref(Mat& A) {
    const int n = A.rows(), m = A.cols();
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m && row < n; ++col) {
        int piv = -1;
        for (int i = row; i < n; ++i)
            if (A(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m; ++j) std::swap(A(piv, j), A(row, j));
        const Rat inv = Rat(1) / A(row, col);
        for (int j = col; j < m; ++j) A(row, j) *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == row || A(i, col) == 0) continue;
            const Rat f = A(i, col);
            for (int j = col; j < m; ++j) A(i, j) -= f * A(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline int rank_gauss(Mat A) { return static_cast<int>(rref(A).size()); }

inline std::optional<Mat> inverse(const Mat& A) {
    if (A.rows() != A.cols()) return std::nullopt;
    const int n = A.rows();
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = A(i, j);
        aug(i, n + i) = 1;
    }
    const std::vector<int> piv = rref(aug);
    if (static_cast<int>(piv.size()) != n || piv.back() != n - 1) return std::nullopt;
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

// Basis of the right nullspace of A, one vector per free column, in
// ascending free-column order with the free variable set to 1.
inline std::vector<std::vector<Rat>> nullspace(const Mat& A) {
    Mat R = A;
    const std::vector<int> piv = rref(R);
    const int m = A.cols();
    std::vector<bool> is_pivot(m, false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < m; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(m, Rat(0));
        v[free] = 1;
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -R(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of A x = b, or nullopt if the system is inconsistent.
inline std::optional<std::vector<Rat>> solve_linear(const Mat& A, const std::vector<Rat>& b) {
    const int n = A.rows(), m = A.cols();
    Mat aug(n, m + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) aug(i, j) = A(i, j);
        aug(i, m) = b[static_cast<size_t>(i)];
    }
    const std::vector<int> piv = rref(aug);
    if (!piv.empty() && piv.back() == m) return std::nullopt; // pivot in the constant column
    std::vector<Rat> x(m, Rat(0));
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(static_cast<int>(r), m);
    return x;
}

} // namespace cltk
