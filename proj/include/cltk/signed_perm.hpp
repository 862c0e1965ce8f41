#pragma once

#include <optional>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace cltk {

// A signed permutation matrix, stored by columns: column j has its unique
// nonzero entry sgn[j] (= +-1) in row img[j].  Every generator image the
// representation builder constructs has this shape, which keeps products,
// inverses and Kronecker products O(n) instead of dense.
struct SignedPerm {
    std::vector<int> img; // row index of the nonzero entry in each column
    std::vector<int> sgn; // its sign

    SignedPerm() = default;
    explicit SignedPerm(int n) : img(n), sgn(n, +1) {
        for (int j = 0; j < n; ++j) img[j] = j;
    }

    static SignedPerm identity(int n) { return SignedPerm(n); }

    int size() const { return static_cast<int>(img.size()); }

    bool operator==(const SignedPerm& o) const { return img == o.img && sgn == o.sgn; }
    bool operator!=(const SignedPerm& o) const { return !(*this == o); }

    // Matrix product: column j goes through B first, then A.
    SignedPerm operator*(const SignedPerm& o) const {
        if (size() != o.size()) throw internal_error("signed-perm product size mismatch");
        SignedPerm r(size());
        for (int j = 0; j < size(); ++j) {
            r.img[j] = img[o.img[j]];
            r.sgn[j] = sgn[o.img[j]] * o.sgn[j];
        }
        return r;
    }

    // Transpose = inverse (these matrices are orthogonal).
    SignedPerm transpose() const {
        SignedPerm r(size());
        for (int j = 0; j < size(); ++j) {
            r.img[img[j]] = j;
            r.sgn[img[j]] = sgn[j];
        }
        return r;
    }
    SignedPerm inverse() const { return transpose(); }

    SignedPerm negated() const {
        SignedPerm r = *this;
        for (int& s : r.sgn) s = -s;
        return r;
    }

    int trace() const {
        int t = 0;
        for (int j = 0; j < size(); ++j)
            if (img[j] == j) t += sgn[j];
        return t;
    }

    // If this equals s * I, return s.
    std::optional<int> as_pm_identity() const {
        for (int j = 0; j < size(); ++j)
            if (img[j] != j || sgn[j] != sgn[0]) return std::nullopt;
        return sgn.empty() ? +1 : sgn[0];
    }

    static SignedPerm kron(const SignedPerm& A, const SignedPerm& B) {
        const int nA = A.size(), nB = B.size();
        SignedPerm r(nA * nB);
        for (int j = 0; j < nA; ++j)
            for (int l = 0; l < nB; ++l) {
                r.img[j * nB + l] = A.img[j] * nB + B.img[l];
                r.sgn[j * nB + l] = A.sgn[j] * B.sgn[l];
            }
        return r;
    }

    Mat to_mat() const {
        Mat m(size(), size());
        for (int j = 0; j < size(); ++j) m(img[j], j) = sgn[j];
        return m;
    }

    static std::optional<SignedPerm> from_mat(const Mat& m) {
        if (m.rows() != m.cols()) return std::nullopt;
        const int n = m.rows();
        SignedPerm r(n);
        std::vector<bool> hit(n, false);
        for (int j = 0; j < n; ++j) {
            int found = -1;
            for (int i = 0; i < n; ++i) {
                const Rat& v = m(i, j);
                if (v == 0) continue;
                if (found >= 0 || (v != 1 && v != -1)) return std::nullopt;
                found = i;
                r.img[j] = i;
                r.sgn[j] = v == 1 ? +1 : -1;
            }
            if (found < 0 || hit[found]) return std::nullopt;
            hit[found] = true;
        }
        return r;
    }
};

} // namespace cltk
