#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "element.hpp"
#include "errors.hpp"
#include "linsolve.hpp"
#include "matrix.hpp"
#include "orbit_solver.hpp"
#include "signed_perm.hpp"

namespace cltk {

// An exact real matrix representation of a Clifford algebra, given by the
// images of the generators.  Every generator image is a signed permutation
// matrix (the construction guarantees this), which keeps blade images and
// the structured solvers fast.
struct MatrixRep {
    Signature sig;
    int dim = 0;                   // size of the pinor space
    std::vector<SignedPerm> gamma; // images of e_1 ... e_d, in order
    std::optional<int> eps;        // sign of gamma(volume); present iff the algebra is non-simple

    // Image of a basis blade: the ascending product of the generator images.
    SignedPerm blade_image(Blade b) const {
        SignedPerm r = SignedPerm::identity(dim);
        for (Blade rest = b; rest != 0; rest &= rest - 1)
            r = r * gamma[static_cast<size_t>(std::countr_zero(rest))];
        return r;
    }

    Mat blade_image_mat(Blade b) const { return blade_image(b).to_mat(); }

    Mat element_image(const CliffordElement& x) const {
        if (x.signature() != sig) throw input_error("element signature does not match the representation");
        Mat m(dim, dim);
        for (const auto& [b, c] : x.terms()) {
            const SignedPerm g = blade_image(b);
            for (int j = 0; j < dim; ++j) m(g.img[j], j) += c * g.sgn[j];
        }
        return m;
    }

    SignedPerm volume_image() const { return blade_image((Blade(1) << sig.d()) - 1); }
};

// ---------------------------------------------------------------------------
// Structured linear systems.  Each equation has the form  T = s * A T B
// with A, B signed permutations, which relates the entries of T in +-1
// pairs; the orbit solver handles any number of such equations at once.
// ---------------------------------------------------------------------------

using SandwichEq = std::tuple<SignedPerm, SignedPerm, int>; // T = s * A T B

inline void impose_sandwich(OrbitSolver& solver, int n, const SandwichEq& eq) {
    const auto& [A, B, s] = eq;
    const SignedPerm Ainv = A.inverse();
    // Entry form: T[i][j] = s * Ainv.sgn[i] * B.sgn[j] * T[Ainv.img[i]][B.img[j]].
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            solver.relate(static_cast<std::size_t>(i) * n + j,
                          static_cast<std::size_t>(Ainv.img[i]) * n + B.img[j],
                          s * Ainv.sgn[i] * B.sgn[j]);
}

// Basis (as dense matrices) of the solution space of a list of sandwich
// equations; optionally also impose T = sym * T^t.
inline std::vector<Mat> solve_sandwich_system(int n, const std::vector<SandwichEq>& eqs,
                                              std::optional<int> sym = std::nullopt) {
    OrbitSolver solver(static_cast<std::size_t>(n) * n);
    for (const auto& eq : eqs) impose_sandwich(solver, n, eq);
    if (sym)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                solver.relate(static_cast<std::size_t>(i) * n + j,
                              static_cast<std::size_t>(j) * n + i, *sym);
    std::vector<Mat> out;
    for (const auto& comp : solver.basis()) {
        Mat m(n, n);
        for (const auto& [e, s] : comp) m(static_cast<int>(e / n), static_cast<int>(e % n)) = s;
        out.push_back(std::move(m));
    }
    return out;
}

// {T : T gamma_i = gamma_i T}  ==  {T : T = gamma_i T gamma_i^{-1}}.
inline std::vector<Mat> commutant_basis(const MatrixRep& rep) {
    std::vector<SandwichEq> eqs;
    for (const auto& g : rep.gamma) eqs.emplace_back(g, g.inverse(), +1);
    return solve_sandwich_system(rep.dim, eqs);
}

// {T : T gamma_i = -gamma_i T}.
inline std::vector<Mat> anticommutant_basis(const MatrixRep& rep) {
    std::vector<SandwichEq> eqs;
    for (const auto& g : rep.gamma) eqs.emplace_back(g, g.inverse(), -1);
    return solve_sandwich_system(rep.dim, eqs);
}

// {T : T gamma_i = gamma'_i T}; empty iff the two representations are
// inequivalent (they are irreducible).
inline std::vector<Mat> intertwiner_basis(const MatrixRep& from, const MatrixRep& to) {
    if (from.sig != to.sig || from.dim != to.dim)
        throw input_error("intertwiner requires representations of the same signature and dimension");
    std::vector<SandwichEq> eqs;
    for (int i = 0; i < from.sig.d(); ++i)
        eqs.emplace_back(to.gamma[static_cast<size_t>(i)], from.gamma[static_cast<size_t>(i)].inverse(), +1);
    return solve_sandwich_system(from.dim, eqs);
}

// ---------------------------------------------------------------------------
// Image dimension (dimension of the span of all blade images), computed by a
// trace census.  Blade images are signed permutations with
// gamma(b)^t = gamma(b)^{-1} = +-gamma(b), so the Gram matrix of the blade
// images in the trace form has entries +-trace(gamma(b xor b')):
//   - traces vanishing away from the empty blade make the Gram matrix
//     diagonal and the 2^d blade images independent;
//   - traces supported on {empty, full} with gamma(volume) = +-I pair each
//     blade with its complement and give exactly 2^{d-1};
//   - anything else falls back to a dense rank computation.
// ---------------------------------------------------------------------------

inline int image_dimension(const MatrixRep& rep) {
    const int d = rep.sig.d();
    const Blade n = Blade(1) << d;
    const Blade full = n - 1;
    bool off_trace = false; // nonzero trace at a blade other than empty/full
    bool full_trace_nonzero = false;
    for (Blade b = 1; b < n; ++b) {
        const int t = rep.blade_image(b).trace();
        if (t != 0) {
            if (b == full)
                full_trace_nonzero = true;
            else
                off_trace = true;
        }
    }
    if (!off_trace) {
        if (!full_trace_nonzero) return 1 << d;
        if (rep.volume_image().as_pm_identity()) return 1 << (d - 1);
    }
    // Dense fallback: rank of the 2^d x dim^2 matrix of vectorized images.
    const long entries = static_cast<long>(n) * rep.dim * rep.dim;
    if (entries > (1L << 24))
        throw resource_error("image-dimension fallback would need a dense rank of " +
                             std::to_string(entries) + " entries");
    Mat M(static_cast<int>(n), rep.dim * rep.dim);
    for (Blade b = 0; b < n; ++b) {
        const SignedPerm g = rep.blade_image(b);
        for (int j = 0; j < rep.dim; ++j) M(static_cast<int>(b), g.img[j] * rep.dim + j) = g.sgn[j];
    }
    return rank_gauss(M);
}

// The image of the volume blade, with its two defining identities asserted.
inline SignedPerm pinor_volume(const MatrixRep& rep) {
    const SignedPerm omega = rep.volume_image();
    const int sigma = volume_square_sign(rep.sig);
    const auto sq = (omega * omega).as_pm_identity();
    if (!sq || *sq != sigma)
        throw internal_error("pinor volume square law failed for " + rep.sig.str());
    const int swap_sign = (rep.sig.d() - 1) % 2 ? -1 : +1;
    for (const auto& g : rep.gamma) {
        SignedPerm lhs = omega * g;
        SignedPerm rhs = g * omega;
        if (swap_sign == -1) rhs = rhs.negated();
        if (lhs != rhs)
            throw internal_error("pinor volume does not (anti)commute with a generator as required");
    }
    return omega;
}

} // namespace cltk
