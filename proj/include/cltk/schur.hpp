#pragma once

#include <optional>
#include <vector>

#include "classify.hpp"
#include "rep.hpp"
#include "rep_build.hpp"

namespace cltk {
namespace detail {

// If Y^2 = want * c^2 * I for a rational c > 0, return Y / c.
inline std::optional<Mat> normalized_unit(const Mat& Y, int want) {
    const auto s = (Y * Y).as_scalar();
    if (!s || *s == 0 || sgn(*s) != want) return std::nullopt;
    const auto c = rat_sqrt(abs(*s));
    if (!c) return std::nullopt;
    return Y * (Rat(1) / *c);
}

// Deterministic candidate list for unit searches inside a small subspace:
// the basis vectors themselves, then pairwise +-combinations with small
// weights.  The structured solver returns +-1 basis vectors with disjoint
// supports, for which the first candidates already succeed; the combinations
// are a safety net for imported modules.
inline std::vector<Mat> unit_candidates(const std::vector<Mat>& basis) {
    std::vector<Mat> out = basis;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            out.push_back(basis[i] + basis[j]);
            out.push_back(basis[i] - basis[j]);
            out.push_back(basis[i] * Rat(2) + basis[j]);
            out.push_back(basis[i] * Rat(2) - basis[j]);
            out.push_back(basis[i] + basis[j] * Rat(2));
            out.push_back(basis[i] - basis[j] * Rat(2));
        }
    return out;
}

inline Mat first_nonzero_positive(Mat m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) return m(i, j) > 0 ? m : -m;
    return m;
}

} // namespace detail

// The commuting division algebra of an irreducible module, with an explicit
// normalized basis: {I}, {I, J} with J^2 = -I, or {I, J1, J2, J3} with the
// quaternion relations.
struct SchurStructure {
    SchurTag tag = SchurTag::R;
    std::vector<Mat> basis;
};

inline SchurStructure compute_schur(const MatrixRep& rep) {
    const std::vector<Mat> cb = commutant_basis(rep);
    SchurStructure out;
    const Mat I = Mat::identity(rep.dim);
    const Rat n(rep.dim);

    auto traceless = [&](const Mat& m) { return m - Mat::scalar(rep.dim, m.trace() / n); };

    switch (cb.size()) {
        case 1: {
            out.tag = SchurTag::R;
            if (!cb[0].as_scalar())
                throw internal_error("one-dimensional commutant is not scalar");
            out.basis = {I};
            return out;
        }
        case 2: {
            out.tag = SchurTag::C;
            std::vector<Mat> tl;
            for (const auto& b : cb)
                if (Mat t = traceless(b); !t.is_zero()) tl.push_back(std::move(t));
            std::optional<Mat> J;
            for (const auto& y : detail::unit_candidates(tl))
                if ((J = detail::normalized_unit(y, -1))) break;
            if (!J) throw internal_error("no complex structure found in a two-dimensional commutant");
            // The complex structure must be the volume image up to sign.
            const Mat nu = rep.volume_image().to_mat();
            if (*J != nu && *J != -nu)
                throw internal_error("complex structure differs from the volume image");
            out.basis = {I, *J};
            return out;
        }
        case 4: {
            out.tag = SchurTag::H;
            std::vector<Mat> tl;
            for (const auto& b : cb)
                if (Mat t = traceless(b); !t.is_zero()) tl.push_back(std::move(t));
            const std::vector<Mat> cands = detail::unit_candidates(tl);
            std::optional<Mat> J1;
            for (const auto& y : cands)
                if ((J1 = detail::normalized_unit(y, -1))) break;
            if (!J1) throw internal_error("no first quaternion unit found");
            std::optional<Mat> J2;
            for (const auto& z : cands) {
                // Project away the J1 component; what remains lies in
                // span{J2, J3} and always squares to a negative scalar.
                Mat w = z + *J1 * z * *J1;
                if (w.is_zero()) continue;
                if ((J2 = detail::normalized_unit(w, -1))) break;
            }
            if (!J2) throw internal_error("no second quaternion unit found");
            if (*J1 * *J2 != -(*J2 * *J1))
                throw internal_error("quaternion units do not anticommute");
            const Mat J3 = *J1 * *J2;
            if ((J3 * J3).as_scalar() != Rat(-1))
                throw internal_error("third quaternion unit does not square to -1");
            out.basis = {I, *J1, *J2, J3};
            // The four units must span the commutant: check each solver
            // vector against its trace-form coordinates.
            for (const auto& b : cb) {
                Mat recon = Mat::scalar(rep.dim, b.trace() / n);
                for (int k = 1; k < 4; ++k)
                    recon = recon + out.basis[k] * ((out.basis[k] * b).trace() / -n);
                if (recon != b)
                    throw internal_error("quaternion units do not span the commutant");
            }
            return out;
        }
        default:
            throw input_error("corrupted module: commutant dimension " +
                              std::to_string(cb.size()) + " is not 1, 2 or 4");
    }
}

// The space of matrices anticommuting with every generator image, plus (in
// the simple cases) a normalized unit u with u^2 = alpha I.
struct AnticommutantStructure {
    std::vector<Mat> basis;
    std::optional<Mat> unit;
};

inline AnticommutantStructure compute_anticommutant(const MatrixRep& rep) {
    const ClassRecord rec = classify(rep.sig);
    AnticommutantStructure out;
    out.basis = anticommutant_basis(rep);
    const std::size_t expected = rec.simple ? static_cast<std::size_t>(schur_dim(rec.schur_tag)) : 0;
    if (out.basis.size() != expected)
        throw internal_error("anticommutant dimension " + std::to_string(out.basis.size()) +
                             " does not match the class of " + rep.sig.str());
    if (!rec.simple) return out;

    const int alpha = *rec.alpha;
    const int m = rec.pq_mod8;
    if (m == 0 || m == 2 || m == 4 || m == 6) {
        // d even: the pinor volume anticommutes with every generator.
        out.unit = pinor_volume(rep).to_mat();
    } else {
        // The complex simple cases: search the solved space.
        std::optional<Mat> u;
        for (const auto& y : detail::unit_candidates(out.basis))
            if ((u = detail::normalized_unit(y, alpha))) break;
        if (!u) throw internal_error("no anticommutant unit found for " + rep.sig.str());
        out.unit = detail::first_nonzero_positive(*u);
    }

    // Unit laws, rechecked whichever branch produced it.
    if ((*out.unit * *out.unit).as_scalar() != Rat(alpha))
        throw internal_error("anticommutant unit square law failed");
    for (const auto& g : rep.gamma) {
        const Mat gm = g.to_mat();
        if (*out.unit * gm != -(gm * *out.unit))
            throw internal_error("anticommutant unit fails to anticommute with a generator");
    }
    return out;
}

} // namespace cltk
