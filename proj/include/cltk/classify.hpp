#pragma once

#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "signature.hpp"

namespace cltk {

// The five cases of the mod-8 classification of real Clifford algebras.
enum class CaseType { NormalSimple, Complex, QuaternionicSimple, NormalNonSimple, QuaternionicNonSimple };

// Schur field of the irreducible real module.
enum class SchurTag { R, C, H };

inline std::string to_string(CaseType t) {
    switch (t) {
        case CaseType::NormalSimple: return "NormalSimple";
        case CaseType::Complex: return "Complex";
        case CaseType::QuaternionicSimple: return "QuaternionicSimple";
        case CaseType::NormalNonSimple: return "NormalNonSimple";
        case CaseType::QuaternionicNonSimple: return "QuaternionicNonSimple";
    }
    throw internal_error("unknown case type");
}

inline std::string to_string(SchurTag t) {
    switch (t) {
        case SchurTag::R: return "R";
        case SchurTag::C: return "C";
        case SchurTag::H: return "H";
    }
    throw internal_error("unknown Schur tag");
}

// Everything the mod-8 class of (p,q) determines.
struct ClassRecord {
    Signature sig;
    int pq_mod8 = 0;
    CaseType case_type = CaseType::NormalSimple;
    SchurTag schur_tag = SchurTag::R;
    bool simple = true;
    int volume_square = +1;            // sign of nu^2
    std::string pseudocenter_tag;      // "D" (split/hyperbolic) or "C"
    std::string extended_pin_name;     // Pin / Spin^c / Spin^h
    std::string canonical_spinor_name; // Pin / Spin^o / Pin^q / Spin / Spin^q
    std::string reduced_lipschitz_name;
    std::optional<int> alpha;          // sign of u^2; absent in the non-simple cases
    int beta = +1;                     // sign in the transpose law for the pinor volume
    int eps_d = +1;
    int eps_e = +1;
};

inline ClassRecord classify(const Signature& sig) {
    ClassRecord r;
    r.sig = sig;
    const int m = sig.mod8();
    r.pq_mod8 = m;

    switch (m) {
        case 0: case 2: r.case_type = CaseType::NormalSimple; break;
        case 3: case 7: r.case_type = CaseType::Complex; break;
        case 4: case 6: r.case_type = CaseType::QuaternionicSimple; break;
        case 1: r.case_type = CaseType::NormalNonSimple; break;
        case 5: r.case_type = CaseType::QuaternionicNonSimple; break;
        default: throw internal_error("mod-8 residue out of range");
    }

    r.schur_tag = (m == 3 || m == 7) ? SchurTag::C
                : (m == 4 || m == 5 || m == 6) ? SchurTag::H
                : SchurTag::R;

    r.simple = !(m == 1 || m == 5);
    r.volume_square = (m == 0 || m == 1 || m == 4 || m == 5) ? +1 : -1;
    r.pseudocenter_tag = r.volume_square == +1 ? "D" : "C";

    switch (m) {
        case 0: case 2: case 4: case 6: r.extended_pin_name = "Pin"; break;
        case 3: case 7: r.extended_pin_name = "Spin^c"; break;
        case 1: case 5: r.extended_pin_name = "Spin^h"; break;
    }

    switch (m) {
        case 0: case 2: r.canonical_spinor_name = "Pin"; break;
        case 3: case 7: r.canonical_spinor_name = "Spin^o"; break;
        case 4: case 6: r.canonical_spinor_name = "Pin^q"; break;
        case 1: r.canonical_spinor_name = "Spin"; break;
        case 5: r.canonical_spinor_name = "Spin^q"; break;
    }
    r.reduced_lipschitz_name = r.canonical_spinor_name;

    switch (m) {
        case 0: r.alpha = +1; break;
        case 2: r.alpha = -1; break;
        case 3: r.alpha = -1; break;
        case 7: r.alpha = +1; break;
        case 4: r.alpha = +1; break;
        case 6: r.alpha = -1; break;
        default: r.alpha = std::nullopt; break; // non-simple: no anticommutant unit
    }

    r.beta = (m % 2 == 0) ? ((sig.p % 2) ? -1 : +1) : +1;

    r.eps_d = ((sig.d() / 2) % 2) ? +1 : -1; // -(-1)^{floor(d/2)}
    r.eps_e = r.simple ? r.eps_d : -r.eps_d;
    return r;
}

inline std::string sign_str(int s) { return s >= 0 ? "+1" : "-1"; }

// One CSV line per signature, in the fixed column order below.
inline std::string classification_csv_header() {
    return "p,q,d,pq_mod8,type,simple,S,nu_sq,T,Pin_e,Lambda,reduced_L";
}

inline std::string classification_csv_row(const ClassRecord& r) {
    std::string s;
    s += std::to_string(r.sig.p) + "," + std::to_string(r.sig.q) + "," + std::to_string(r.sig.d());
    s += "," + std::to_string(r.pq_mod8);
    s += "," + to_string(r.case_type);
    s += r.simple ? ",true" : ",false";
    s += "," + to_string(r.schur_tag);
    s += "," + sign_str(r.volume_square);
    s += "," + r.pseudocenter_tag;
    s += "," + r.extended_pin_name;
    s += "," + r.canonical_spinor_name;
    s += "," + r.reduced_lipschitz_name;
    return s;
}

// Full classification table for 1 <= d <= range_d, ordered by d ascending
// and p descending within each d.  The order is fixed so the output can be
// compared byte-for-byte.
inline std::string emit_tables(int range_d) {
    if (range_d < 1) throw input_error("table range must be at least 1");
    std::string out = classification_csv_header() + "\n";
    for (int d = 1; d <= range_d; ++d)
        for (int p = d; p >= 0; --p)
            out += classification_csv_row(classify(Signature(p, d - p))) + "\n";
    return out;
}

} // namespace cltk
