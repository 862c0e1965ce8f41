#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "signature.hpp"

namespace cltk {

// A basis blade e_{i1}...e_{ik} (indices ascending) stored as a bit mask:
// bit i set means generator e_{i+1} is present.
using Blade = std::uint32_t;

inline int grade(Blade b) { return std::popcount(b); }

// Sign incurred by reordering the concatenation of a and b into ascending
// order: each generator of b must hop over the generators of a with larger
// index, contributing one transposition per hop.
inline int reorder_sign(Blade a, Blade b) {
    int t = 0;
    for (Blade rest = b; rest != 0; rest &= rest - 1) {
        const int i = std::countr_zero(rest);
        t += std::popcount(a >> (i + 1));
    }
    return (t & 1) ? -1 : +1;
}

// Total sign of the product of two basis blades: reorder sign times the
// metric square of every generator the two blades share.
inline int blade_mul_sign(Blade a, Blade b, const Signature& sig) {
    int s = reorder_sign(a, b);
    for (Blade common = a & b; common != 0; common &= common - 1)
        s *= sig.metric_sign(std::countr_zero(common));
    return s;
}

// The product of two basis blades is (sign) * this blade.
inline Blade blade_mul_mask(Blade a, Blade b) { return a ^ b; }

// "e1e3e4" style label; the empty blade renders as "1".
inline std::string blade_str(Blade b) {
    if (b == 0) return "1";
    std::string s;
    for (Blade rest = b; rest != 0; rest &= rest - 1)
        s += "e" + std::to_string(std::countr_zero(rest) + 1);
    return s;
}

} // namespace cltk
