#pragma once

#include <string>

#include "errors.hpp"

namespace cltk {

// A real quadratic-space signature: p generators squaring to +1 followed by
// q generators squaring to -1.
struct Signature {
    int p = 0;
    int q = 0;

    Signature() = default;
    Signature(int p_, int q_) : p(p_), q(q_) {
        if (p < 0 || q < 0 || p + q < 1)
            throw input_error("signature requires p >= 0, q >= 0, p + q >= 1 (got p=" +
                              std::to_string(p_) + ", q=" + std::to_string(q_) + ")");
    }

    int d() const { return p + q; }

    // (p - q) mod 8, reduced into {0,...,7}.
    int mod8() const { return ((p - q) % 8 + 8) % 8; }

    // Square of the i-th generator (0-based): +1 for i < p, -1 otherwise.
    int metric_sign(int i) const { return i < p ? +1 : -1; }

    bool operator==(const Signature& o) const { return p == o.p && q == o.q; }
    bool operator!=(const Signature& o) const { return !(*this == o); }

    std::string str() const { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }
};

} // namespace cltk
