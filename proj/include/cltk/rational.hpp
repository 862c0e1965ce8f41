#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "errors.hpp"

namespace cltk {

// All coefficients in the library are exact rationals.  Every identity is a
// sign-level statement, so there is no floating point anywhere.
using Rat = mpq_class;
using Int = mpz_class;

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Parse "a", "-a", or "a/b" (base 10).  Throws input_error on junk or on a
// zero denominator.
inline Rat parse_rat(const std::string& s) {
    mpq_class r;
    if (s.empty() || mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw input_error("bad rational literal: '" + s + "'");
    if (r.get_den() == 0)
        throw input_error("zero denominator in rational literal: '" + s + "'");
    r.canonicalize();
    return r;
}

// Exact square root when r is the square of a rational; nullopt otherwise.
inline std::optional<Rat> rat_sqrt(const Rat& r) {
    if (sgn(r) < 0) return std::nullopt;
    const Int num = r.get_num(), den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) ||
        !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    Int sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return Rat(sn, sd);
}

} // namespace cltk
