#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <string>

#include "blade.hpp"
#include "errors.hpp"
#include "rational.hpp"
#include "rng.hpp"
#include "signature.hpp"

namespace cltk {

// Dimension bound for dense-over-blades arithmetic; above this the blade
// table (2^d terms) stops being a sensible representation.
inline constexpr int kMaxElementDim = 12;

inline void require_small_dimension(const Signature& sig) {
    if (sig.d() > kMaxElementDim)
        throw resource_error("algebra dimension d=" + std::to_string(sig.d()) +
                             " exceeds the supported bound d<=" + std::to_string(kMaxElementDim));
}

enum class InvolutionKind { Parity, Reversion, TwistedReversion, ImprovedReversion };
enum class NormKind { N, Ntwisted, Nimproved };

// Element of the real Clifford algebra of a signature, stored as a sparse
// blade->coefficient map.  Zero coefficients are never stored, so the map
// order (ascending mask) is the canonical term order everywhere.
class CliffordElement {
  public:
    explicit CliffordElement(const Signature& sig) : sig_(sig) { require_small_dimension(sig); }

    static CliffordElement scalar(const Signature& sig, const Rat& c) {
        CliffordElement x(sig);
        x.add_term(0, c);
        return x;
    }

    static CliffordElement basis_blade(const Signature& sig, Blade b, const Rat& c = Rat(1)) {
        if (b >> sig.d())
            throw input_error("blade uses a generator outside the signature");
        CliffordElement x(sig);
        x.add_term(b, c);
        return x;
    }

    // Generator e_i, 1-based.
    static CliffordElement generator(const Signature& sig, int i) {
        if (i < 1 || i > sig.d())
            throw input_error("generator index " + std::to_string(i) + " out of range for " + sig.str());
        return basis_blade(sig, Blade(1) << (i - 1));
    }

    static CliffordElement random(const Signature& sig, Rng& rng, long max_abs = 4) {
        CliffordElement x(sig);
        const Blade n = Blade(1) << sig.d();
        // Sparse by default: roughly a quarter of the blades get a coefficient.
        for (Blade b = 0; b < n; ++b)
            if (rng.below(4) == 0) x.add_term(b, Rat(rng.range(-max_abs, max_abs)));
        if (x.coef_.empty()) x.add_term(0, Rat(rng.range(1, max_abs)));
        return x;
    }

    const Signature& signature() const { return sig_; }
    const std::map<Blade, Rat>& terms() const { return coef_; }

    Rat coeff(Blade b) const {
        auto it = coef_.find(b);
        return it == coef_.end() ? Rat(0) : it->second;
    }

    bool is_zero() const { return coef_.empty(); }

    std::optional<Rat> as_scalar() const {
        if (coef_.empty()) return Rat(0);
        if (coef_.size() == 1 && coef_.begin()->first == 0) return coef_.begin()->second;
        return std::nullopt;
    }

    bool operator==(const CliffordElement& o) const { return sig_ == o.sig_ && coef_ == o.coef_; }
    bool operator!=(const CliffordElement& o) const { return !(*this == o); }

    CliffordElement operator+(const CliffordElement& o) const {
        require_same_signature(o);
        CliffordElement r = *this;
        for (const auto& [b, c] : o.coef_) r.add_term(b, c);
        return r;
    }

    CliffordElement operator-(const CliffordElement& o) const {
        require_same_signature(o);
        CliffordElement r = *this;
        for (const auto& [b, c] : o.coef_) r.add_term(b, -c);
        return r;
    }

    CliffordElement operator-() const {
        CliffordElement r(sig_);
        for (const auto& [b, c] : coef_) r.coef_.emplace(b, -c);
        return r;
    }

    CliffordElement operator*(const CliffordElement& o) const {
        require_same_signature(o);
        CliffordElement r(sig_);
        for (const auto& [a, ca] : coef_)
            for (const auto& [b, cb] : o.coef_)
                r.add_term(blade_mul_mask(a, b), ca * cb * blade_mul_sign(a, b, sig_));
        return r;
    }

    CliffordElement operator*(const Rat& s) const {
        CliffordElement r(sig_);
        if (s != 0)
            for (const auto& [b, c] : coef_) r.coef_.emplace(b, c * s);
        return r;
    }

    CliffordElement even_part() const { return graded_part(0); }
    CliffordElement odd_part() const { return graded_part(1); }

    // Canonical text form: terms in ascending blade-mask order joined by
    // " + "; the scalar term is a bare rational, every other term is
    // "<coefficient>*e<i>e<j>...".  The zero element prints as "0".
    std::string str() const {
        if (coef_.empty()) return "0";
        std::string s;
        for (const auto& [b, c] : coef_) {
            if (!s.empty()) s += " + ";
            if (b == 0)
                s += rat_str(c);
            else
                s += rat_str(c) + "*" + blade_str(b);
        }
        return s;
    }

    void add_term(Blade b, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = coef_.emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coef_.erase(it);
        }
    }

  private:
    CliffordElement graded_part(int parity) const {
        CliffordElement r(sig_);
        for (const auto& [b, c] : coef_)
            if (grade(b) % 2 == parity) r.coef_.emplace(b, c);
        return r;
    }

    void require_same_signature(const CliffordElement& o) const {
        if (sig_ != o.sig_) throw input_error("mixed signatures in element arithmetic");
    }

    Signature sig_;
    std::map<Blade, Rat> coef_;
};

inline CliffordElement operator*(const Rat& s, const CliffordElement& x) { return x * s; }

inline CliffordElement clifford_product(const CliffordElement& x, const CliffordElement& y) {
    return x * y;
}

// Sign picked up by a grade-k blade under each involution.
inline int involution_sign(InvolutionKind kind, int k, int d) {
    switch (kind) {
        case InvolutionKind::Parity: return (k & 1) ? -1 : +1;
        case InvolutionKind::Reversion: return (k * (k - 1) / 2) % 2 ? -1 : +1;
        case InvolutionKind::TwistedReversion:
            return involution_sign(InvolutionKind::Parity, k, d) *
                   involution_sign(InvolutionKind::Reversion, k, d);
        case InvolutionKind::ImprovedReversion: {
            const int m = d % 4;
            return involution_sign(
                m == 2 || m == 3 ? InvolutionKind::Reversion : InvolutionKind::TwistedReversion, k, d);
        }
    }
    throw internal_error("unknown involution kind");
}

inline CliffordElement involution(const CliffordElement& x, InvolutionKind kind) {
    CliffordElement r(x.signature());
    const int d = x.signature().d();
    for (const auto& [b, c] : x.terms())
        r.add_term(b, c * involution_sign(kind, grade(b), d));
    return r;
}

// norm(x, N)        = reversion(x) * x
// norm(x, Ntwisted) = twisted_reversion(x) * x
// norm(x, Nimproved)= improved_reversion(x) * x
inline CliffordElement norm(const CliffordElement& x, NormKind kind) {
    InvolutionKind inv;
    switch (kind) {
        case NormKind::N: inv = InvolutionKind::Reversion; break;
        case NormKind::Ntwisted: inv = InvolutionKind::TwistedReversion; break;
        case NormKind::Nimproved: inv = InvolutionKind::ImprovedReversion; break;
        default: throw internal_error("unknown norm kind");
    }
    return involution(x, inv) * x;
}

// Sign of the square of the volume element e_1...e_d.
inline int volume_square_sign(const Signature& sig) {
    return ((sig.q + sig.d() / 2) & 1) ? -1 : +1;
}

// The volume element nu = e_1 e_2 ... e_d.  Its defining identities are
// recomputed from scratch and asserted, as a self-check of the sign tables.
inline CliffordElement volume_element(const Signature& sig) {
    require_small_dimension(sig);
    const Blade full = (Blade(1) << sig.d()) - 1;
    CliffordElement nu = CliffordElement::basis_blade(sig, full);
    const int sigma = volume_square_sign(sig);
    if (nu * nu != CliffordElement::scalar(sig, Rat(sigma)))
        throw internal_error("volume element square law failed for " + sig.str());
    const int tau_sign = (sig.d() / 2) % 2 ? -1 : +1;
    if (involution(nu, InvolutionKind::Reversion) != nu * Rat(tau_sign))
        throw internal_error("volume element reversion law failed for " + sig.str());
    return nu;
}

// ---------------------------------------------------------------------------
// Parsing of the canonical text form (tolerant about whitespace, term order,
// duplicate blades, and generator order inside a term).  Terms may be joined
// by '+' or '-'; a '-' separator negates the term that follows.
// ---------------------------------------------------------------------------

inline CliffordElement parse_element(const Signature& sig, const std::string& text) {
    CliffordElement out(sig);
    std::size_t pos = 0;
    auto is_digit = [&](std::size_t i) {
        return i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]));
    };
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos == text.size()) throw input_error("empty element literal");
    bool first = true;
    while (true) {
        int term_sign = +1;
        if (!first) {
            if (text[pos] == '-') term_sign = -1;
            else if (text[pos] != '+')
                throw input_error("expected '+' or '-' between element terms near '" +
                                  text.substr(pos) + "'");
            ++pos;
            skip_ws();
            if (pos == text.size()) throw input_error("dangling sign in element literal");
        }
        // Optional coefficient: [sign] digits [/ digits].  A bare sign in
        // front of a blade ("-e1") is also accepted.
        const std::size_t start = pos;
        int bare_sign = +1;
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') bare_sign = -1;
            ++pos;
        }
        const std::size_t num_start = pos;
        while (is_digit(pos)) ++pos;
        Rat coef;
        bool had_coef = false;
        if (pos > num_start) {
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                if (!is_digit(pos)) throw input_error("missing denominator in element literal");
                while (is_digit(pos)) ++pos;
            }
            coef = parse_rat(text.substr(start, pos - start));
            had_coef = true;
        } else {
            coef = bare_sign;
        }
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
            if (!had_coef) throw input_error("'*' without a coefficient in element literal");
            ++pos;
            skip_ws();
        }
        // Blade factors e<digits>, multiplied left to right so duplicate or
        // out-of-order indices are handled by the algebra itself.
        CliffordElement term = CliffordElement::scalar(sig, coef);
        bool had_blade = false;
        while (pos < text.size() && text[pos] == 'e' && is_digit(pos + 1)) {
            ++pos;
            const std::size_t istart = pos;
            while (is_digit(pos)) ++pos;
            term = term * CliffordElement::generator(sig, std::stoi(text.substr(istart, pos - istart)));
            had_blade = true;
        }
        if (!had_coef && !had_blade)
            throw input_error("unreadable term in element literal near '" + text.substr(start) + "'");
        out = out + (term_sign < 0 ? -term : term);
        first = false;
        skip_ws();
        if (pos == text.size()) break;
    }
    return out;
}

} // namespace cltk
