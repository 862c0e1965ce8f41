// Hyperbolic (split-complex) number tests: ring axioms, the modulus, the
// diagonalizing isomorphism, unit components, and the Cl(1,0) dictionary.

#include <catch2/catch_amalgamated.hpp>
#include <cltk/cltk.hpp>

#include <vector>

using namespace cltk;

namespace {

std::vector<Rat> small_grid() {
    std::vector<Rat> g;
    for (int n = -6; n <= 6; ++n) g.push_back(Rat(n) / 2); // -3 .. 3 step 1/2
    return g;
}

} // namespace

TEST_CASE("ring axioms and the defining relation j^2 = +1") {
    REQUIRE(Hyperbolic::j() * Hyperbolic::j() == Hyperbolic::one());
    const auto grid = small_grid();
    for (const Rat& a : grid)
        for (const Rat& b : grid) {
            const Hyperbolic z{a, b};
            const Hyperbolic w{b, a - b};
            const Hyperbolic v{a - b, a};
            REQUIRE(z * w == w * z);
            REQUIRE((z + w) * v == z * v + w * v);
            REQUIRE((z * w) * v == z * (w * v));
            REQUIRE(z + (-z) == Hyperbolic{});
            REQUIRE(z * Hyperbolic::one() == z);
        }
}

TEST_CASE("modulus is multiplicative and conjugation realizes it") {
    const auto grid = small_grid();
    for (const Rat& a : grid)
        for (const Rat& b : grid) {
            const Hyperbolic z{a, b};
            const Hyperbolic w{b - 1, a + 1};
            REQUIRE(z.modulus() == a * a - b * b);
            REQUIRE((z * w).modulus() == z.modulus() * w.modulus());
            REQUIRE(z * z.conj() == Hyperbolic{z.modulus(), Rat(0)});
        }
}

TEST_CASE("diagonal coordinates give a ring isomorphism onto R x R") {
    const auto grid = small_grid();
    for (const Rat& a : grid)
        for (const Rat& b : grid) {
            const Hyperbolic z{a, b};
            const Hyperbolic w{Rat(2) - a, b + Rat(1, 2)};
            const auto [zu, zv] = z.diag();
            const auto [wu, wv] = w.diag();
            const auto [pu, pv] = (z * w).diag();
            REQUIRE(pu == zu * wu);
            REQUIRE(pv == zv * wv);
            const auto [su, sv] = (z + w).diag();
            REQUIRE(su == zu + wu);
            REQUIRE(sv == zv + wv);
            REQUIRE(Hyperbolic::from_diag(zu, zv) == z);
            // The modulus is the product of the diagonal coordinates.
            REQUIRE(z.modulus() == zu * zv);
        }
}

TEST_CASE("named points of the component table") {
    REQUIRE(Hyperbolic::j().diag() == std::pair<Rat, Rat>{Rat(1), Rat(-1)});
    REQUIRE(unit_component(Hyperbolic::one()) == UnitComponent::PlusPlus);
    REQUIRE(unit_component(Hyperbolic::j()) == UnitComponent::PlusMinus);
    REQUIRE(unit_component(-Hyperbolic::j()) == UnitComponent::MinusPlus);
    REQUIRE(unit_component(-Hyperbolic::one()) == UnitComponent::MinusMinus);
    REQUIRE(to_string(UnitComponent::PlusMinus) == "+-");
    REQUIRE(to_string(UnitComponent::NotAUnit) == "not_a_unit");
    // A non-trivial unit on each modulus level.
    const Hyperbolic boost{Rat(5, 4), Rat(3, 4)}; // M = +1
    REQUIRE(unit_component(boost) == UnitComponent::PlusPlus);
    const Hyperbolic antiboost = boost * Hyperbolic::j(); // M = -1
    REQUIRE(unit_component(antiboost) == UnitComponent::PlusMinus);
    REQUIRE(unit_component(Hyperbolic{Rat(3), Rat(2)}) == UnitComponent::NotAUnit);
}

TEST_CASE("units are exactly the elements of modulus +-1") {
    const auto grid = small_grid();
    for (const Rat& a : grid)
        for (const Rat& b : grid) {
            const Hyperbolic z{a, b};
            const Rat m = z.modulus();
            const UnitComponent c = unit_component(z);
            if (m == 1 || m == -1) {
                REQUIRE(c != UnitComponent::NotAUnit);
                const auto [u, v] = z.diag();
                const bool up = u > 0, vp = v > 0;
                const UnitComponent expect = up ? (vp ? UnitComponent::PlusPlus : UnitComponent::PlusMinus)
                                                : (vp ? UnitComponent::MinusPlus : UnitComponent::MinusMinus);
                REQUIRE(c == expect);
            } else {
                REQUIRE(c == UnitComponent::NotAUnit);
            }
        }
}

TEST_CASE("inversion works away from the null cone and fails on it") {
    const auto grid = small_grid();
    for (const Rat& a : grid)
        for (const Rat& b : grid) {
            const Hyperbolic z{a, b};
            if (z.is_invertible()) {
                REQUIRE(z * z.inverse() == Hyperbolic::one());
            } else {
                REQUIRE((a == b || a == -b));
                REQUIRE_THROWS_AS(z.inverse(), zero_divisor_error);
            }
        }
}

TEST_CASE("the dictionary with Cl(1,0) is an exact ring isomorphism") {
    // x + y j corresponds to x + y e1; products, conjugation, and the
    // modulus all transport across the dictionary.
    const Signature sig(1, 0);
    const auto embed = [&](const Hyperbolic& z) {
        return z.x * CliffordElement::scalar(sig, 1) + z.y * CliffordElement::generator(sig, 1);
    };
    const auto grid = small_grid();
    for (const Rat& a : grid)
        for (const Rat& b : grid) {
            const Hyperbolic z{a, b};
            const Hyperbolic w{b + 1, a - 2};
            REQUIRE(embed(z * w) == embed(z) * embed(w));
            REQUIRE(embed(z + w) == embed(z) + embed(w));
            // Conjugation is the improved reversion; the modulus is the
            // improved norm.
            REQUIRE(embed(z.conj()) == involution(embed(z), InvolutionKind::ImprovedReversion));
            REQUIRE(norm(embed(z), NormKind::Nimproved) ==
                    CliffordElement::scalar(sig, z.modulus()));
        }
}
