#pragma once

#include <functional>
#include <vector>

#include "classify.hpp"
#include "linsolve.hpp"
#include "rep.hpp"
#include "schur.hpp"

namespace cltk {

// The invariant bilinear pairing of an irreducible module: the unique (up to
// scale, here normalized) B with
//     B^t = sym * B,   gamma_i^t B = type * B gamma_i,
// compatible with the extra filters that pin down the canonical one in the
// complex and quaternionic cases.  `type` is the improved-transpose sign of
// the signature's class.
struct BilinearForm {
    Mat B;
    Mat B_inv;
    int sym = +1;
    int type = +1;
};

namespace detail {

// Restrict the span of `cands` by the homogeneous linear conditions; returns
// a basis of the surviving subspace.
inline std::vector<Mat> filter_span(const std::vector<Mat>& cands,
                                    const std::vector<std::function<Mat(const Mat&)>>& conds) {
    if (cands.empty()) return {};
    if (conds.empty()) return cands;
    const int n = cands.front().rows();
    const int rows_per = n * n;
    Mat C(static_cast<int>(conds.size()) * rows_per, static_cast<int>(cands.size()));
    for (std::size_t k = 0; k < cands.size(); ++k)
        for (std::size_t m = 0; m < conds.size(); ++m) {
            const Mat img = conds[m](cands[k]);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    C(static_cast<int>(m) * rows_per + i * n + j, static_cast<int>(k)) = img(i, j);
        }
    std::vector<Mat> out;
    for (const auto& coef : nullspace(C)) {
        Mat b(n, n);
        for (std::size_t k = 0; k < cands.size(); ++k)
            if (coef[k] != 0) b = b + cands[k] * coef[k];
        out.push_back(std::move(b));
    }
    return out;
}

inline Mat scale_first_entry_to_one(const Mat& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) return m * (Rat(1) / m(i, j));
    throw internal_error("cannot normalize the zero matrix");
}

} // namespace detail

inline BilinearForm find_canonical_pairing(const MatrixRep& rep) {
    const ClassRecord rec = classify(rep.sig);
    const int type = rec.eps_e;
    const SchurStructure schur = compute_schur(rep);

    // Extra filters: the Schur units must be anti-selfadjoint for B, and in
    // the complex case the anticommutant unit must be B-orthogonal.
    std::vector<std::function<Mat(const Mat&)>> conds;
    if (schur.tag == SchurTag::C) {
        const Mat J = schur.basis[1];
        conds.push_back([J](const Mat& B) { return J.transpose() * B + B * J; });
        const AnticommutantStructure anti = compute_anticommutant(rep);
        const Mat u = *anti.unit;
        const Rat alpha(*rec.alpha);
        conds.push_back([u, alpha](const Mat& B) { return u.transpose() * B - B * u * alpha; });
    } else if (schur.tag == SchurTag::H) {
        for (int k = 1; k < 4; ++k) {
            const Mat J = schur.basis[static_cast<std::size_t>(k)];
            conds.push_back([J](const Mat& B) { return J.transpose() * B + B * J; });
        }
    }

    std::vector<SandwichEq> eqs;
    for (const auto& g : rep.gamma) eqs.emplace_back(g, g, type);

    std::vector<std::pair<int, Mat>> survivors; // (sym, B)
    for (int sym : {+1, -1})
        for (auto& b : detail::filter_span(solve_sandwich_system(rep.dim, eqs, sym), conds))
            survivors.emplace_back(sym, std::move(b));
    if (survivors.size() != 1)
        throw internal_error("canonical pairing space has dimension " +
                             std::to_string(survivors.size()) + " for " + rep.sig.str() +
                             ", expected 1");

    BilinearForm bf;
    bf.sym = survivors.front().first;
    bf.type = type;
    bf.B = detail::scale_first_entry_to_one(survivors.front().second);
    const auto inv = inverse(bf.B);
    if (!inv) throw internal_error("canonical pairing is degenerate for " + rep.sig.str());
    bf.B_inv = *inv;

    // Recheck every defining identity on the normalized form.
    if (bf.B.transpose() != bf.B * Rat(bf.sym))
        throw internal_error("pairing symmetry law failed");
    for (const auto& g : rep.gamma) {
        const Mat gm = g.to_mat();
        if (gm.transpose() * bf.B != bf.B * gm * Rat(type))
            throw internal_error("pairing transpose law failed");
    }
    for (const auto& c : conds)
        if (!c(bf.B).is_zero()) throw internal_error("pairing filter law failed");
    return bf;
}

// X^{t_e} = B^{-1} X^t B, the algebraic transpose the pairing induces.
inline Mat improved_transpose(const BilinearForm& bf, const Mat& X) {
    return bf.B_inv * X.transpose() * bf.B;
}

// N_e(a) = a^{t_e} a; lands in R^x I on the Lipschitz group.
inline Mat lipschitz_norm(const BilinearForm& bf, const Mat& a) {
    return improved_transpose(bf, a) * a;
}

} // namespace cltk
