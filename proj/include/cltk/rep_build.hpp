#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "classify.hpp"
#include "rep.hpp"

namespace cltk {
namespace detail {

// --- quaternion multiplication table on the basis (1, i, j, k) -------------

inline constexpr int kQuatIdx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
inline constexpr int kQuatSgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};

// Left multiplication x -> q_a x on R^4.
inline SignedPerm quat_left(int a) {
    SignedPerm m(4);
    for (int b = 0; b < 4; ++b) {
        m.img[b] = kQuatIdx[a][b];
        m.sgn[b] = kQuatSgn[a][b];
    }
    return m;
}

// Right multiplication x -> x q_a on R^4 (commutes with every left one).
inline SignedPerm quat_right(int a) {
    SignedPerm m(4);
    for (int b = 0; b < 4; ++b) {
        m.img[b] = kQuatIdx[b][a];
        m.sgn[b] = kQuatSgn[b][a];
    }
    return m;
}

// --- small signed-perm building blocks --------------------------------------

inline SignedPerm sp_diag_pm() { // diag(1, -1)
    SignedPerm m(2);
    m.sgn[1] = -1;
    return m;
}

inline SignedPerm sp_swap() { // [[0,1],[1,0]]
    SignedPerm m(2);
    m.img = {1, 0};
    return m;
}

inline SignedPerm sp_rot() { // [[0,1],[-1,0]]
    SignedPerm m(2);
    m.img = {1, 0};
    m.sgn = {-1, +1};
    return m;
}

inline SignedPerm sp_rot_inv() { // [[0,-1],[1,0]]
    SignedPerm m(2);
    m.img = {1, 0};
    m.sgn = {+1, -1};
    return m;
}

// [[A,0],[0,B]] for equal-size signed perms.
inline SignedPerm sp_blockdiag(const SignedPerm& A, const SignedPerm& B) {
    const int m = A.size();
    SignedPerm r(2 * m);
    for (int j = 0; j < m; ++j) {
        r.img[j] = A.img[j];
        r.sgn[j] = A.sgn[j];
        r.img[m + j] = m + B.img[j];
        r.sgn[m + j] = B.sgn[j];
    }
    return r;
}

// [[0,U],[V,0]]: the first block of columns runs through V into the lower
// rows, the second through U into the upper rows.
inline SignedPerm sp_antidiag(const SignedPerm& U, const SignedPerm& V) {
    const int m = U.size();
    SignedPerm r(2 * m);
    for (int j = 0; j < m; ++j) {
        r.img[j] = m + V.img[j];
        r.sgn[j] = V.sgn[j];
        r.img[m + j] = U.img[j];
        r.sgn[m + j] = U.sgn[j];
    }
    return r;
}

// --- the recursion -----------------------------------------------------------
//
// Minimal generator sets are assembled from four seeds and three reductions:
//   * (p,q) with p,q >= 1   doubles from (p-1,q-1) via the 2x2 split algebra;
//   * (p,0) with p >= 2     comes from the mirror (0,p-2) via a 2x2 factor;
//   * (0,q) with q >= 3     comes from the mirror (q-2,0), where the extra
//     quaternion factor is absorbed into whatever division algebra the mirror
//     already has -- otherwise the result would not be minimal.  The three
//     absorption shapes are keyed by the mirror's Schur type.
// Quaternionic right actions ("units") are carried along wherever they exist
// so the absorption step can consume them.

struct RecBuild {
    int dim = 1;
    std::vector<SignedPerm> plus_gens;  // images of the +1 generators, in order
    std::vector<SignedPerm> minus_gens; // images of the -1 generators, in order
    std::vector<SignedPerm> units;      // anticommuting pair of right quaternion units (Schur H only)
};

inline RecBuild build_rec(int p, int q) {
    RecBuild r;
    if (p == 0 && q == 0) return r;
    if (p == 1 && q == 0) {
        r.plus_gens.push_back(SignedPerm::identity(1));
        return r;
    }
    if (p == 0 && q == 1) {
        r.dim = 2;
        r.minus_gens.push_back(sp_rot_inv());
        return r;
    }
    if (p == 0 && q == 2) {
        r.dim = 4;
        r.minus_gens = {quat_left(1), quat_left(2)};
        r.units = {quat_right(1), quat_right(2)};
        return r;
    }
    if (p >= 1 && q >= 1) {
        const RecBuild old = build_rec(p - 1, q - 1);
        const SignedPerm Iold = SignedPerm::identity(old.dim);
        const SignedPerm I2 = SignedPerm::identity(2);
        r.dim = 2 * old.dim;
        r.plus_gens.push_back(SignedPerm::kron(sp_diag_pm(), Iold));
        for (const auto& g : old.plus_gens) r.plus_gens.push_back(SignedPerm::kron(sp_swap(), g));
        r.minus_gens.push_back(SignedPerm::kron(sp_rot(), Iold));
        for (const auto& g : old.minus_gens) r.minus_gens.push_back(SignedPerm::kron(sp_swap(), g));
        for (const auto& u : old.units) r.units.push_back(SignedPerm::kron(I2, u));
        return r;
    }
    if (q == 0) { // p >= 2
        const RecBuild old = build_rec(0, p - 2);
        const SignedPerm Iold = SignedPerm::identity(old.dim);
        const SignedPerm I2 = SignedPerm::identity(2);
        r.dim = 2 * old.dim;
        r.plus_gens.push_back(SignedPerm::kron(sp_diag_pm(), Iold));
        r.plus_gens.push_back(SignedPerm::kron(sp_swap(), Iold));
        for (const auto& f : old.minus_gens) r.plus_gens.push_back(SignedPerm::kron(sp_rot(), f));
        for (const auto& u : old.units) r.units.push_back(SignedPerm::kron(I2, u));
        return r;
    }
    // p == 0, q >= 3: absorb a quaternion factor into the mirror (q-2, 0).
    const RecBuild old = build_rec(q - 2, 0);
    const SchurTag mirror_tag = classify(Signature(q - 2, 0)).schur_tag;
    if (mirror_tag == SchurTag::R) {
        const SignedPerm Iold = SignedPerm::identity(old.dim);
        r.dim = 4 * old.dim;
        r.minus_gens.push_back(SignedPerm::kron(quat_left(1), Iold));
        r.minus_gens.push_back(SignedPerm::kron(quat_left(2), Iold));
        for (const auto& g : old.plus_gens) r.minus_gens.push_back(SignedPerm::kron(quat_left(3), g));
        r.units = {SignedPerm::kron(quat_right(1), Iold), SignedPerm::kron(quat_right(2), Iold)};
        return r;
    }
    if (mirror_tag == SchurTag::C) {
        // The mirror's volume is a central complex structure J'; the double
        // space R^m + R^m then carries q anticommuting complex structures.
        SignedPerm J = SignedPerm::identity(old.dim);
        for (const auto& g : old.plus_gens) J = J * g;
        if (auto sq = (J * J).as_pm_identity(); !sq || *sq != -1)
            throw internal_error("mirror volume is not a complex structure in the absorption step");
        r.dim = 2 * old.dim;
        r.minus_gens.push_back(sp_blockdiag(J, J.negated()));
        r.minus_gens.push_back(sp_antidiag(SignedPerm::identity(old.dim).negated(),
                                           SignedPerm::identity(old.dim)));
        for (const auto& g : old.plus_gens) {
            const SignedPerm X = (g * J).negated();
            r.minus_gens.push_back(sp_antidiag(X, X));
        }
        return r;
    }
    // Mirror Schur type H: its two right quaternion units become the first
    // two generators and the third twists the old ones; same dimension.
    if (old.units.size() != 2)
        throw internal_error("quaternionic mirror carries no unit pair in the absorption step");
    const SignedPerm J1 = old.units[0], J2 = old.units[1];
    const SignedPerm J3 = J1 * J2;
    r.dim = old.dim;
    r.minus_gens.push_back(J1);
    r.minus_gens.push_back(J2);
    for (const auto& g : old.plus_gens) r.minus_gens.push_back(g * J3);
    return r;
}

} // namespace detail

inline int schur_dim(SchurTag t) { return t == SchurTag::R ? 1 : t == SchurTag::C ? 2 : 4; }

// Expected minimal matrix size for an irreducible module of the signature.
inline int minimal_irrep_dim(const Signature& sig) {
    const ClassRecord rec = classify(sig);
    long n2 = (1L << sig.d()) * schur_dim(rec.schur_tag);
    if (!rec.simple) n2 /= 2;
    int n = 1;
    while (static_cast<long>(n) * n < n2) n *= 2;
    if (static_cast<long>(n) * n != n2)
        throw internal_error("minimal irrep dimension is not a power of two for " + sig.str());
    return n;
}

namespace detail {

inline MatrixRep finalize_build(const Signature& sig, RecBuild rb, std::optional<int> eps) {
    MatrixRep rep;
    rep.sig = sig;
    rep.dim = rb.dim;
    rep.gamma = std::move(rb.plus_gens);
    rep.gamma.insert(rep.gamma.end(), rb.minus_gens.begin(), rb.minus_gens.end());
    // Generator relations, rechecked on every build.
    for (int i = 0; i < sig.d(); ++i) {
        const auto sq = (rep.gamma[i] * rep.gamma[i]).as_pm_identity();
        if (!sq || *sq != sig.metric_sign(i))
            throw internal_error("generator square law failed in build for " + sig.str());
        for (int j = i + 1; j < sig.d(); ++j)
            if (rep.gamma[i] * rep.gamma[j] != (rep.gamma[j] * rep.gamma[i]).negated())
                throw internal_error("generator anticommutation failed in build for " + sig.str());
    }
    if (rep.dim != minimal_irrep_dim(sig))
        throw internal_error("built module has non-minimal dimension for " + sig.str());

    const bool simple = classify(sig).simple;
    if (simple) {
        if (rep.volume_image().as_pm_identity())
            throw internal_error("volume image collapsed to a scalar in the simple case");
        rep.eps = std::nullopt;
    } else {
        const auto s = rep.volume_image().as_pm_identity();
        if (!s) throw internal_error("volume image is not a scalar in the non-simple case");
        if (*s != *eps)
            for (auto& g : rep.gamma) g = g.negated(); // pass to the twin module
        rep.eps = *eps;
        if (auto s2 = rep.volume_image().as_pm_identity(); !s2 || *s2 != *eps)
            throw internal_error("volume sign correction failed");
    }
    return rep;
}

} // namespace detail

// Irreducible module of a simple algebra (the two non-simple residues need
// the volume sign; see the two-argument overload).
inline MatrixRep build_irrep(const Signature& sig) {
    require_small_dimension(sig);
    if (!classify(sig).simple)
        throw input_error("signature " + sig.str() +
                          " is non-simple: the volume sign eps must be supplied");
    return detail::finalize_build(sig, detail::build_rec(sig.p, sig.q), std::nullopt);
}

// Irreducible module of a non-simple algebra with the chosen volume sign.
inline MatrixRep build_irrep(const Signature& sig, int eps) {
    require_small_dimension(sig);
    if (eps != +1 && eps != -1) throw input_error("eps must be +1 or -1");
    if (classify(sig).simple)
        throw input_error("signature " + sig.str() +
                          " is simple: the irreducible module is unique, eps must not be supplied");
    return detail::finalize_build(sig, detail::build_rec(sig.p, sig.q), eps);
}

// The inequivalent sibling of a non-simple module: negate every generator,
// which flips the volume sign.
inline MatrixRep twin_irrep(const MatrixRep& rep) {
    if (!rep.eps)
        throw input_error("twin module exists only in the non-simple case (no eps on this module)");
    MatrixRep twin = rep;
    for (auto& g : twin.gamma) g = g.negated();
    twin.eps = -*rep.eps;
    if (auto s = twin.volume_image().as_pm_identity(); !s || *s != *twin.eps)
        throw internal_error("twin volume sign law failed");
    return twin;
}

// ---------------------------------------------------------------------------
// Text export: "p q dim eps" (eps written as 0 when the algebra is simple and
// the sign undefined), then the d generator matrices row-major, one row per
// line.  The format round-trips bit-exactly.
// ---------------------------------------------------------------------------

inline std::string export_rep(const MatrixRep& rep) {
    std::string out = std::to_string(rep.sig.p) + " " + std::to_string(rep.sig.q) + " " +
                      std::to_string(rep.dim) + " " + std::to_string(rep.eps ? *rep.eps : 0) + "\n";
    for (const auto& g : rep.gamma) {
        const Mat m = g.to_mat();
        for (int i = 0; i < rep.dim; ++i) {
            std::string line;
            for (int j = 0; j < rep.dim; ++j) {
                if (j) line += " ";
                line += rat_str(m(i, j));
            }
            out += line + "\n";
        }
    }
    return out;
}

inline MatrixRep import_rep(const std::string& text) {
    std::istringstream in(text);
    int p, q, dim, eps;
    if (!(in >> p >> q >> dim >> eps)) throw input_error("bad module header");
    const Signature sig(p, q);
    if (dim < 1) throw input_error("bad module dimension");
    if (eps != -1 && eps != 0 && eps != 1) throw input_error("bad eps field in module header");
    MatrixRep rep;
    rep.sig = sig;
    rep.dim = dim;
    for (int k = 0; k < sig.d(); ++k) {
        Mat m(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                std::string tok;
                if (!(in >> tok)) throw input_error("truncated module file");
                m(i, j) = parse_rat(tok);
            }
        const auto sp = SignedPerm::from_mat(m);
        if (!sp) throw input_error("generator " + std::to_string(k + 1) +
                                   " is not a signed permutation matrix");
        rep.gamma.push_back(*sp);
    }
    rep.eps = eps == 0 ? std::nullopt : std::optional<int>(eps);
    if (classify(sig).simple != !rep.eps)
        throw input_error("eps field inconsistent with the simplicity of " + sig.str());
    // Revalidate the algebra relations on import.
    for (int i = 0; i < sig.d(); ++i) {
        const auto sq = (rep.gamma[i] * rep.gamma[i]).as_pm_identity();
        if (!sq || *sq != sig.metric_sign(i))
            throw input_error("imported generators violate the square law");
        for (int j = i + 1; j < sig.d(); ++j)
            if (rep.gamma[i] * rep.gamma[j] != (rep.gamma[j] * rep.gamma[i]).negated())
                throw input_error("imported generators violate anticommutation");
    }
    if (rep.eps) {
        if (auto s = rep.volume_image().as_pm_identity(); !s || *s != *rep.eps)
            throw input_error("imported volume sign does not match the eps field");
    }
    return rep;
}

} // namespace cltk
