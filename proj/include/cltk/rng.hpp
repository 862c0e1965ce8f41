#pragma once

#include <cstdint>

#include "rational.hpp"

namespace cltk {

// Deterministic generator used by every sampling operation.  splitmix64 is
// used directly (std::uniform_int_distribution is implementation-defined,
// which would break seed-pinned golden outputs across toolchains).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n), unbiased (rejection sampling).
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t lim = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = next();
        while (v >= lim) v = next();
        return v % n;
    }

    // Uniform integer in [lo, hi], inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool flip() { return next() & 1; }

    // Small rational with numerator in [-m, m] and denominator in [1, m].
    Rat small_rat(long m) {
        Rat r(range(-m, m), range(1, m));
        r.canonicalize();
        return r;
    }

  private:
    std::uint64_t state_;
};

// Documented default for every CLI sampling path.
inline constexpr std::uint64_t kDefaultSeed = 12345;

} // namespace cltk
