#pragma once

#include <string>
#include <utility>

#include "errors.hpp"
#include "rational.hpp"

namespace cltk {

// Inverting an element whose modulus vanishes.
struct zero_divisor_error : input_error {
    using input_error::input_error;
};

// Which connected component of the modulus-one group an element lies in,
// read off from the signs of its two diagonal coordinates.
enum class UnitComponent { PlusPlus, PlusMinus, MinusPlus, MinusMinus, NotAUnit };

inline std::string to_string(UnitComponent c) {
    switch (c) {
        case UnitComponent::PlusPlus: return "++";
        case UnitComponent::PlusMinus: return "+-";
        case UnitComponent::MinusPlus: return "-+";
        case UnitComponent::MinusMinus: return "--";
        case UnitComponent::NotAUnit: return "not_a_unit";
    }
    throw internal_error("unknown unit component");
}

// The hyperbolic (split-complex) numbers x + j y with j^2 = +1, over the
// rationals.  Self-contained on purpose: nothing here depends on the
// Clifford machinery, even though the ring is isomorphic to one of the
// algebras (the test suite checks that isomorphism).
struct Hyperbolic {
    Rat x; // real part
    Rat y; // coefficient of j

    Hyperbolic() : x(0), y(0) {}
    Hyperbolic(Rat x_, Rat y_) : x(std::move(x_)), y(std::move(y_)) {}

    static Hyperbolic one() { return {Rat(1), Rat(0)}; }
    static Hyperbolic j() { return {Rat(0), Rat(1)}; }

    bool operator==(const Hyperbolic& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Hyperbolic& o) const { return !(*this == o); }

    Hyperbolic operator+(const Hyperbolic& o) const { return {x + o.x, y + o.y}; }
    Hyperbolic operator-(const Hyperbolic& o) const { return {x - o.x, y - o.y}; }
    Hyperbolic operator-() const { return {-x, -y}; }
    Hyperbolic operator*(const Hyperbolic& o) const {
        return {x * o.x + y * o.y, x * o.y + y * o.x};
    }

    Hyperbolic conj() const { return {x, -y}; }

    // Hyperbolic modulus M(z) = z * conj(z) = x^2 - y^2 (can be negative).
    Rat modulus() const { return x * x - y * y; }

    // Ring isomorphism onto R x R: the two eigencoordinates of j.
    std::pair<Rat, Rat> diag() const { return {x + y, x - y}; }
    static Hyperbolic from_diag(const Rat& u, const Rat& v) {
        return {(u + v) / 2, (u - v) / 2};
    }

    bool is_invertible() const { return modulus() != 0; }

    Hyperbolic inverse() const {
        const Rat m = modulus();
        if (m == 0)
            throw zero_divisor_error("cannot invert " + str() + ": modulus is zero (zero divisor)");
        return {x / m, -y / m};
    }

    std::string str() const {
        if (y < 0) return rat_str(x) + " - " + rat_str(-y) + "*j";
        return rat_str(x) + " + " + rat_str(y) + "*j";
    }
};

// Component label, defined exactly on the modulus = +-1 group.
inline UnitComponent unit_component(const Hyperbolic& z) {
    const Rat m = z.modulus();
    if (m != 1 && m != -1) return UnitComponent::NotAUnit;
    const auto [u, v] = z.diag();
    if (u > 0) return v > 0 ? UnitComponent::PlusPlus : UnitComponent::PlusMinus;
    return v > 0 ? UnitComponent::MinusPlus : UnitComponent::MinusMinus;
}

} // namespace cltk
