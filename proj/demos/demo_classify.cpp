// Demo: classify a signature, build its irreducible representation, and
// inspect the commutant and canonical pairing.

#include <cltk/cltk.hpp>

#include <iostream>

int main() {
    using namespace cltk;

    const Signature sig(1, 3); // "mostly minus" Minkowski convention
    const ClassRecord rec = classify(sig);
    std::cout << "Cl" << sig.str() << ": p - q = " << rec.pq_mod8 << " mod 8, "
              << to_string(rec.case_type) << ", Schur algebra " << to_string(rec.schur_tag)
              << ", volume square " << sign_str(rec.volume_square) << "\n";

    const MatrixRep rep = rec.simple ? build_irrep(sig) : build_irrep(sig, +1);
    std::cout << "irreducible representation dimension: " << rep.dim << "\n";
    for (int i = 0; i < sig.d(); ++i)
        std::cout << "gamma_" << (i + 1) << " =\n" << rep.gamma[i].to_mat().str() << "\n";

    const SchurStructure schur = compute_schur(rep);
    std::cout << "commutant dimension: " << schur.basis.size() << "\n";

    const BilinearForm bf = find_canonical_pairing(rep);
    std::cout << "canonical pairing: sym = " << sign_str(bf.sym) << ", type = "
              << sign_str(bf.type) << "\nB =\n" << bf.B.str() << "\n";

    // Clifford elements can also be written and parsed as text.
    const CliffordElement x = parse_element(sig, "1/2 + 3*e1e4 + -2*e2");
    std::cout << "element: " << x.str() << "\n";
    std::cout << "reversion: " << involution(x, InvolutionKind::Reversion).str() << "\n";
    std::cout << "improved norm: " << norm(x, NormKind::Nimproved).str() << "\n";
    return 0;
}
