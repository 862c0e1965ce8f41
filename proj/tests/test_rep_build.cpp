// Representation tests: dimensions, relations, commutant/anticommutant
// structure, twins, text export/import, and the canonical pairing.

#include <catch2/catch_amalgamated.hpp>
#include <cltk/cltk.hpp>

#include <string>
#include <vector>

using namespace cltk;

namespace {

MatrixRep canonical_rep(const Signature& sig, int eps = +1) {
    return classify(sig).simple ? build_irrep(sig) : build_irrep(sig, eps);
}

// Dense rank of the image span: an independent check of weak faithfulness.
long long dense_image_dim(const MatrixRep& rep) {
    const int n2 = rep.dim * rep.dim;
    const int blades = 1 << rep.sig.d();
    Mat rows(blades, n2);
    for (int b = 0; b < blades; ++b) {
        const Mat img = rep.blade_image_mat(static_cast<Blade>(b));
        for (int i = 0; i < rep.dim; ++i)
            for (int j = 0; j < rep.dim; ++j) rows(b, i * rep.dim + j) = img(i, j);
    }
    return rank_gauss(rows);
}

} // namespace

TEST_CASE("pinned small representations") {
    // Cl(1,0) with eps = +1 is the sign representation gamma(e1) = [+1].
    const MatrixRep plus = build_irrep(Signature(1, 0), +1);
    REQUIRE(plus.dim == 1);
    REQUIRE(plus.gamma[0].to_mat() == Mat::scalar(1, Rat(1)));
    const MatrixRep minus = build_irrep(Signature(1, 0), -1);
    REQUIRE(minus.gamma[0].to_mat() == Mat::scalar(1, Rat(-1)));
    // Cl(0,1) is the complex case: dimension 2.
    REQUIRE(build_irrep(Signature(0, 1)).dim == 2);
    // High-signature spot checks.
    REQUIRE(build_irrep(Signature(10, 1), +1).dim == 32);
    REQUIRE(build_irrep(Signature(1, 10)).dim == 64);
}

TEST_CASE("eps is demanded exactly in the non-simple cases") {
    REQUIRE_THROWS_AS(build_irrep(Signature(1, 0)), input_error);        // non-simple: eps needed
    REQUIRE_THROWS_AS(build_irrep(Signature(0, 3)), input_error);
    REQUIRE_THROWS_AS(build_irrep(Signature(2, 0), +1), input_error);    // simple: eps forbidden
    REQUIRE_THROWS_AS(build_irrep(Signature(0, 1), -1), input_error);
    REQUIRE_NOTHROW(build_irrep(Signature(2, 0)));
    REQUIRE_NOTHROW(build_irrep(Signature(2, 1), -1));
}

TEST_CASE("relations hold as dense matrices and dimensions match the table") {
    for (int d = 1; d <= 5; ++d)
        for (int p = 0; p <= d; ++p) {
            const Signature sig(p, d - p);
            const MatrixRep rep = canonical_rep(sig);
            REQUIRE(rep.dim == minimal_irrep_dim(sig));
            const Mat I = Mat::identity(rep.dim);
            std::vector<Mat> g;
            for (int i = 0; i < d; ++i) g.push_back(rep.gamma[i].to_mat());
            for (int i = 0; i < d; ++i) {
                REQUIRE(g[i] * g[i] == Rat(sig.metric_sign(i)) * I);
                for (int j = i + 1; j < d; ++j)
                    REQUIRE(g[i] * g[j] == -(g[j] * g[i]));
            }
        }
}

TEST_CASE("element images respect products and involution transport") {
    Rng rng(51);
    for (const Signature sig : {Signature(2, 1), Signature(1, 2), Signature(0, 4), Signature(3, 1)}) {
        const MatrixRep rep = canonical_rep(sig);
        for (int trial = 0; trial < 15; ++trial) {
            const auto a = CliffordElement::random(sig, rng, 4);
            const auto b = CliffordElement::random(sig, rng, 4);
            REQUIRE(rep.element_image(a * b) == rep.element_image(a) * rep.element_image(b));
            REQUIRE(rep.element_image(a + b) == rep.element_image(a) + rep.element_image(b));
        }
        REQUIRE_THROWS_AS(rep.element_image(CliffordElement::scalar(Signature(1, 1), 1)),
                          input_error);
    }
}

TEST_CASE("commutant realizes the Schur algebra of the mod-8 class") {
    for (int d = 1; d <= 5; ++d)
        for (int p = 0; p <= d; ++p) {
            const Signature sig(p, d - p);
            const ClassRecord rec = classify(sig);
            const MatrixRep rep = canonical_rep(sig);
            const SchurStructure schur = compute_schur(rep);
            REQUIRE(schur.tag == rec.schur_tag);
            REQUIRE(static_cast<int>(schur.basis.size()) == schur_dim(rec.schur_tag));
            const Mat I = Mat::identity(rep.dim);
            REQUIRE(schur.basis[0] == I);
            if (schur.tag == SchurTag::C) {
                REQUIRE(schur.basis[1] * schur.basis[1] == Rat(-1) * I);
            } else if (schur.tag == SchurTag::H) {
                const Mat &J1 = schur.basis[1], &J2 = schur.basis[2], &J3 = schur.basis[3];
                REQUIRE(J1 * J1 == Rat(-1) * I);
                REQUIRE(J2 * J2 == Rat(-1) * I);
                REQUIRE(J3 * J3 == Rat(-1) * I);
                REQUIRE(J1 * J2 == J3);
                REQUIRE(J2 * J1 == Rat(-1) * J3);
            }
            // Every basis element genuinely commutes with every generator.
            for (const Mat& s : schur.basis)
                for (const SignedPerm& gsp : rep.gamma) {
                    const Mat g = gsp.to_mat();
                    REQUIRE(s * g == g * s);
                }
        }
}

TEST_CASE("image dimension: census shortcut equals dense rank") {
    for (int d = 1; d <= 5; ++d)
        for (int p = 0; p <= d; ++p) {
            const Signature sig(p, d - p);
            const MatrixRep rep = canonical_rep(sig);
            const long long want =
                classify(sig).simple ? (1LL << d) : (1LL << (d - 1));
            REQUIRE(image_dimension(rep) == want);
            REQUIRE(dense_image_dim(rep) == want);
        }
}

TEST_CASE("non-simple volume law, twins, and equivalence classes") {
    for (const Signature sig : {Signature(1, 0), Signature(2, 1), Signature(0, 3), Signature(3, 2),
                                Signature(5, 0)}) {
        REQUIRE_FALSE(classify(sig).simple);
        for (int eps : {+1, -1}) {
            const MatrixRep rep = build_irrep(sig, eps);
            const auto pm = rep.volume_image().as_pm_identity();
            REQUIRE(pm.has_value());
            REQUIRE(*pm == eps);
        }
        const MatrixRep a = build_irrep(sig, +1);
        const MatrixRep twin = twin_irrep(a);
        REQUIRE(twin.eps == -1);
        // The twins are inequivalent: no nonzero intertwiner exists.
        REQUIRE(intertwiner_basis(a, twin).empty());
        // Rebuilding with the same eps gives an equivalent module; the
        // intertwiner space then has the full Schur dimension.
        const MatrixRep b = build_irrep(sig, +1);
        REQUIRE(static_cast<int>(intertwiner_basis(a, b).size()) ==
                schur_dim(classify(sig).schur_tag));
    }
}

TEST_CASE("anticommutant dimension law and the twisting unit") {
    for (int d = 1; d <= 5; ++d)
        for (int p = 0; p <= d; ++p) {
            const Signature sig(p, d - p);
            const ClassRecord rec = classify(sig);
            const MatrixRep rep = canonical_rep(sig);
            const AnticommutantStructure anti = compute_anticommutant(rep);
            if (!rec.simple) {
                REQUIRE(anti.basis.empty());
                REQUIRE_FALSE(anti.unit.has_value());
                continue;
            }
            REQUIRE(static_cast<int>(anti.basis.size()) == schur_dim(rec.schur_tag));
            REQUIRE(anti.unit.has_value());
            const Mat& u = *anti.unit;
            REQUIRE(u * u == Rat(*rec.alpha) * Mat::identity(rep.dim));
            for (const SignedPerm& gsp : rep.gamma) {
                const Mat g = gsp.to_mat();
                REQUIRE(u * g == Rat(-1) * (g * u));
            }
        }
}

TEST_CASE("text export/import round-trips and rejects corruption") {
    for (const Signature sig : {Signature(2, 1), Signature(1, 2), Signature(0, 3)}) {
        const MatrixRep rep = canonical_rep(sig, -1);
        const std::string text = export_rep(rep);
        const MatrixRep back = import_rep(text);
        REQUIRE(back.sig == rep.sig);
        REQUIRE(back.dim == rep.dim);
        REQUIRE(back.eps == rep.eps);
        for (int i = 0; i < sig.d(); ++i) {
            REQUIRE(back.gamma[i].img == rep.gamma[i].img);
            REQUIRE(back.gamma[i].sgn == rep.gamma[i].sgn);
        }
    }
    const std::string good = export_rep(build_irrep(Signature(2, 1), +1));
    // An entry of magnitude 2 is not a signed permutation matrix.
    std::string bad_entry = good;
    bad_entry.replace(bad_entry.find("\n1"), 2, "\n2");
    REQUIRE_THROWS_AS(import_rep(bad_entry), input_error);
    // A flipped eps header contradicts the volume image.
    std::string bad_eps = good;
    const auto header_end = bad_eps.find('\n');
    bad_eps.replace(bad_eps.rfind('1', header_end), 1, "-1");
    REQUIRE_THROWS_AS(import_rep(bad_eps), input_error);
    REQUIRE_THROWS_AS(import_rep(""), input_error);
    REQUIRE_THROWS_AS(import_rep("2 1"), input_error);
}

TEST_CASE("canonical pairing: transpose law, symmetry, omega law") {
    for (int d = 1; d <= 5; ++d)
        for (int p = 0; p <= d; ++p) {
            const Signature sig(p, d - p);
            const ClassRecord rec = classify(sig);
            const MatrixRep rep = canonical_rep(sig);
            const BilinearForm bf = find_canonical_pairing(rep);
            REQUIRE(bf.type == rec.eps_e);
            REQUIRE(bf.B.transpose() == Rat(bf.sym) * bf.B);
            REQUIRE(bf.B * bf.B_inv == Mat::identity(rep.dim));
            // Generators transform with sign eps_e under the improved transpose.
            for (const SignedPerm& gsp : rep.gamma) {
                const Mat g = gsp.to_mat();
                REQUIRE(improved_transpose(bf, g) == Rat(bf.type) * g);
            }
            // The improved transpose is an antiautomorphism of order two.
            Rng rng(61);
            for (int trial = 0; trial < 8; ++trial) {
                const Mat x = rep.element_image(CliffordElement::random(sig, rng, 3));
                const Mat y = rep.element_image(CliffordElement::random(sig, rng, 3));
                REQUIRE(improved_transpose(bf, x * y) ==
                        improved_transpose(bf, y) * improved_transpose(bf, x));
                REQUIRE(improved_transpose(bf, improved_transpose(bf, x)) == x);
            }
            // omega^{t_e} = beta omega^{-1}.
            const Mat omega = rep.volume_image().to_mat();
            const Mat omega_inv = rep.volume_image().inverse().to_mat();
            REQUIRE(improved_transpose(bf, omega) == Rat(rec.beta) * omega_inv);
        }
}
