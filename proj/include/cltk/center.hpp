#pragma once

#include <vector>

#include "element.hpp"

namespace cltk {

// Conjugation by a generator sends each basis blade to +-(itself), so the
// sign below decides whether e_{i+1} (0-based i) commutes (+1) or
// anticommutes (-1) with the blade.
inline int generator_commute_sign(int i, Blade b, const Signature& sig) {
    const Blade g = Blade(1) << i;
    return blade_mul_sign(g, b, sig) * blade_mul_sign(b, g, sig);
}

struct CenterStructure {
    std::vector<CliffordElement> center;         // blades commuting with every generator
    std::vector<CliffordElement> twisted_center; // blades anticommuting with every generator
};

// Computes both spaces by direct search over the blade basis (conjugation is
// diagonal in that basis, so both spaces are spanned by blades).
inline CenterStructure solve_center_and_twisted_center(const Signature& sig) {
    require_small_dimension(sig);
    CenterStructure out;
    const Blade n = Blade(1) << sig.d();
    for (Blade b = 0; b < n; ++b) {
        bool all_commute = true, all_anticommute = true;
        for (int i = 0; i < sig.d(); ++i) {
            if (generator_commute_sign(i, b, sig) == +1)
                all_anticommute = false;
            else
                all_commute = false;
        }
        if (all_commute) out.center.push_back(CliffordElement::basis_blade(sig, b));
        if (all_anticommute) out.twisted_center.push_back(CliffordElement::basis_blade(sig, b));
    }
    return out;
}

} // namespace cltk
