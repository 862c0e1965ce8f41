#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "classify.hpp"
#include "errors.hpp"
#include "signature.hpp"

namespace cltk {

// --- GF(2) cohomology data ----------------------------------------------------

using Gf2Vec = std::vector<int>; // entries 0/1

inline Gf2Vec gf2_zero_vec(int rank) { return Gf2Vec(static_cast<std::size_t>(rank), 0); }

inline bool gf2_is_zero(const Gf2Vec& v) {
    for (int b : v)
        if (b) return false;
    return true;
}

inline Gf2Vec gf2_add(const Gf2Vec& a, const Gf2Vec& b) {
    if (a.size() != b.size()) throw internal_error("GF(2) vector size mismatch");
    Gf2Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) & 1;
    return r;
}

inline Gf2Vec gf2_scale(int c, const Gf2Vec& a) {
    return (c & 1) ? a : gf2_zero_vec(static_cast<int>(a.size()));
}

inline std::string gf2_str(const Gf2Vec& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

// An auxiliary bundle offered as a candidate for the existential conditions.
struct AuxBundleClass {
    enum class Kind { SO3, O2 };
    Kind kind = Kind::SO3;
    Gf2Vec w1E; // zero for SO3
    Gf2Vec w2E;
};

inline std::string to_string(AuxBundleClass::Kind k) {
    return k == AuxBundleClass::Kind::SO3 ? "SO3" : "O2";
}

// The degree <= 2 mod-2 cohomology of a base space, with the characteristic
// classes of a split metric bundle of signature (p,q) over it.
struct CohomologyContext {
    int p = 0, q = 0;
    int h1_rank = 0, h2_rank = 0;
    std::vector<std::vector<Gf2Vec>> cup; // cup[i][j]: H2 coordinates of a_i U a_j
    Gf2Vec w1M, w1p, w1m; // H1 classes: total and the two summands
    Gf2Vec w2p, w2m;      // H2 classes of the two summands
    std::vector<AuxBundleClass> candidates;
    std::vector<std::string> h1_names, h2_names; // generator labels for rendering
};

// Render a class as a sum of named generators ("0" when it vanishes).
inline std::string render_class(const Gf2Vec& v, const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i]) continue;
        if (!s.empty()) s += " + ";
        s += i < names.size() ? names[i] : "?" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

inline std::string render_h1(const CohomologyContext& ctx, const Gf2Vec& v) {
    return render_class(v, ctx.h1_names);
}

inline std::string render_h2(const CohomologyContext& ctx, const Gf2Vec& v) {
    return render_class(v, ctx.h2_names);
}

inline Gf2Vec cup_product(const CohomologyContext& ctx, const Gf2Vec& x, const Gf2Vec& y) {
    if (static_cast<int>(x.size()) != ctx.h1_rank || static_cast<int>(y.size()) != ctx.h1_rank)
        throw input_error("cup product arguments must lie in H1");
    Gf2Vec r = gf2_zero_vec(ctx.h2_rank);
    for (int i = 0; i < ctx.h1_rank; ++i) {
        if (!x[i]) continue;
        for (int j = 0; j < ctx.h1_rank; ++j)
            if (y[j]) r = gf2_add(r, ctx.cup[i][j]);
    }
    return r;
}

// --- consistency of the input data --------------------------------------------

struct ConsistencyReport {
    bool consistent = true;
    std::vector<std::string> violations;
    Gf2Vec w2M; // Whitney total: w2p + w2m + w1p U w1m
};

inline ConsistencyReport w2_consistency(const CohomologyContext& ctx) {
    ConsistencyReport rep;
    rep.w2M = gf2_add(gf2_add(ctx.w2p, ctx.w2m), cup_product(ctx, ctx.w1p, ctx.w1m));
    auto violate = [&](const std::string& v) {
        rep.consistent = false;
        rep.violations.push_back(v);
    };
    if (ctx.w1M != gf2_add(ctx.w1p, ctx.w1m))
        violate("w1M must equal w1p + w1m");
    if (ctx.p == 0 && !gf2_is_zero(ctx.w1p)) violate("rank-0 plus bundle cannot have w1p != 0");
    if (ctx.p <= 1 && !gf2_is_zero(ctx.w2p)) violate("rank<=1 plus bundle cannot have w2p != 0");
    if (ctx.q == 0 && !gf2_is_zero(ctx.w1m)) violate("rank-0 minus bundle cannot have w1m != 0");
    if (ctx.q <= 1 && !gf2_is_zero(ctx.w2m)) violate("rank<=1 minus bundle cannot have w2m != 0");
    for (int i = 0; i < ctx.h1_rank; ++i)
        for (int j = i; j < ctx.h1_rank; ++j)
            if (ctx.cup[i][j] != ctx.cup[j][i]) violate("cup table is not symmetric");
    return rep;
}

inline void require_consistent(const CohomologyContext& ctx) {
    const ConsistencyReport rep = w2_consistency(ctx);
    if (!rep.consistent) {
        std::string msg = "inconsistent cohomology context: ";
        for (std::size_t i = 0; i < rep.violations.size(); ++i) {
            if (i) msg += "; ";
            msg += rep.violations[i];
        }
        throw input_error(msg);
    }
}

// --- verdicts -------------------------------------------------------------------

enum class Existence { No, Yes, Conditional };

inline std::string to_string(Existence e) {
    return e == Existence::No ? "no" : e == Existence::Yes ? "yes" : "conditional";
}

struct ObstructionVerdict {
    std::string structure;
    Existence exists = Existence::No;
    std::vector<std::string> required_classes; // what an auxiliary bundle must provide
    Gf2Vec obstruction_value;                  // the H2 class that must vanish or be hit
    std::vector<std::string> notes;
};

// --- the obstruction computations ------------------------------------------------

inline ObstructionVerdict spin_obstruction(const CohomologyContext& ctx) {
    require_consistent(ctx);
    ObstructionVerdict v;
    v.structure = "spin";
    v.obstruction_value = gf2_add(ctx.w2p, ctx.w2m);
    const bool orientable = gf2_is_zero(ctx.w1M);
    if (!orientable) v.notes.push_back("total bundle is non-orientable: w1M = " + render_h1(ctx, ctx.w1M));
    v.exists = (orientable && gf2_is_zero(v.obstruction_value)) ? Existence::Yes : Existence::No;
    return v;
}

namespace detail {

// Left-hand side of the untwisted even-rank pinor condition:
// w2p + w2m + w1s U w1s + w1m U w1p, where w1s follows the volume sign.
inline Gf2Vec pin_lhs(const CohomologyContext& ctx) {
    const int sigma = volume_square_sign(Signature(ctx.p, ctx.q));
    const Gf2Vec& w1s = sigma == +1 ? ctx.w1p : ctx.w1m;
    Gf2Vec r = gf2_add(ctx.w2p, ctx.w2m);
    r = gf2_add(r, cup_product(ctx, w1s, w1s));
    r = gf2_add(r, cup_product(ctx, ctx.w1m, ctx.w1p));
    return r;
}

inline CohomologyContext swap_bundles(const CohomologyContext& ctx) {
    CohomologyContext s = ctx;
    std::swap(s.p, s.q);
    std::swap(s.w1p, s.w1m);
    std::swap(s.w2p, s.w2m);
    return s;
}

// Scan candidates for a matching auxiliary bundle; the trivial bundle is
// always available when nothing non-zero is required.
inline void resolve_existential(ObstructionVerdict& v, const CohomologyContext& ctx,
                                AuxBundleClass::Kind kind, const Gf2Vec& need_w1,
                                const Gf2Vec& need_w2) {
    std::string requirement = to_string(kind) + " bundle with ";
    if (kind == AuxBundleClass::Kind::O2) requirement += "w1E = " + render_h1(ctx, need_w1) + " and ";
    requirement += "w2E = " + render_h2(ctx, need_w2);
    v.required_classes.push_back(requirement);
    if (gf2_is_zero(need_w1) && gf2_is_zero(need_w2)) {
        v.exists = Existence::Yes;
        v.notes.push_back("the trivial auxiliary bundle satisfies the requirement");
        return;
    }
    for (std::size_t k = 0; k < ctx.candidates.size(); ++k) {
        const AuxBundleClass& c = ctx.candidates[k];
        if (c.kind != kind) continue;
        const bool w1_ok = kind == AuxBundleClass::Kind::SO3 ? gf2_is_zero(need_w1)
                                                             : c.w1E == need_w1;
        if (w1_ok && c.w2E == need_w2) {
            v.exists = Existence::Yes;
            v.notes.push_back("candidate bundle #" + std::to_string(k) + " satisfies the requirement");
            return;
        }
    }
    v.exists = Existence::Conditional;
    v.notes.push_back("no listed candidate matches; existence depends on realizing the required class");
}

} // namespace detail

inline ObstructionVerdict pin_untwisted_obstruction(const CohomologyContext& ctx) {
    require_consistent(ctx);
    if ((ctx.p + ctx.q) % 2 != 0)
        throw input_error("the untwisted pinor condition applies to even total rank; "
                          "odd rank obeys the swapped (twisted) statement");
    ObstructionVerdict v;
    v.structure = "pin";
    v.obstruction_value = detail::pin_lhs(ctx);
    v.exists = gf2_is_zero(v.obstruction_value) ? Existence::Yes : Existence::No;
    const Gf2Vec twisted = detail::pin_lhs(detail::swap_bundles(ctx));
    v.notes.push_back("twisted statement (bundles swapped, metric reversed): obstruction = " +
                      render_h2(ctx, twisted) + ", " +
                      (gf2_is_zero(twisted) ? std::string("vanishes") : std::string("does not vanish")));
    return v;
}

inline ObstructionVerdict spinq_obstruction(const CohomologyContext& ctx) {
    require_consistent(ctx);
    ObstructionVerdict v;
    v.structure = "spinq";
    v.obstruction_value = gf2_add(ctx.w2p, ctx.w2m);
    if (!gf2_is_zero(ctx.w1M)) {
        v.exists = Existence::No;
        v.notes.push_back("total bundle is non-orientable: w1M = " + render_h1(ctx, ctx.w1M));
        return v;
    }
    detail::resolve_existential(v, ctx, AuxBundleClass::Kind::SO3, gf2_zero_vec(ctx.h1_rank),
                                v.obstruction_value);
    return v;
}

inline ObstructionVerdict pinq_untwisted_obstruction(const CohomologyContext& ctx) {
    require_consistent(ctx);
    if ((ctx.p + ctx.q) % 2 != 0)
        throw input_error("the untwisted quaternionic pinor condition applies to even total rank");
    ObstructionVerdict v;
    v.structure = "pinq";
    v.obstruction_value = detail::pin_lhs(ctx);
    detail::resolve_existential(v, ctx, AuxBundleClass::Kind::SO3, gf2_zero_vec(ctx.h1_rank),
                                v.obstruction_value);
    return v;
}

// Coefficient of w1E^2 in the complex-case condition:
// delta_{alpha,-1} + p(p+1)/2 + q(q+1)/2 mod 2.
inline int spino_self_cup_coefficient(int p, int q) {
    const ClassRecord rec = classify(Signature(p, q));
    if (rec.pq_mod8 != 3 && rec.pq_mod8 != 7)
        throw input_error("the hyperbolic-twisted condition applies to the complex residues 3 and 7");
    return ((*rec.alpha == -1 ? 1 : 0) + (p * (p + 1) / 2) + (q * (q + 1) / 2)) % 2;
}

inline ObstructionVerdict spino_obstruction(const CohomologyContext& ctx) {
    require_consistent(ctx);
    ObstructionVerdict v;
    v.structure = "spino";
    // Required auxiliary O2 bundle: w1E = w1M and
    // w2E = w2p + w2m + w1E U (p w1p + q w1m) + c w1E U w1E.
    const int c = spino_self_cup_coefficient(ctx.p, ctx.q);
    v.notes.push_back(std::string("self-cup coefficient c = ") + std::to_string(c));
    const Gf2Vec mix = gf2_add(gf2_scale(ctx.p, ctx.w1p), gf2_scale(ctx.q, ctx.w1m));
    Gf2Vec need = gf2_add(ctx.w2p, ctx.w2m);
    need = gf2_add(need, cup_product(ctx, ctx.w1M, mix));
    need = gf2_add(need, gf2_scale(c, cup_product(ctx, ctx.w1M, ctx.w1M)));
    v.obstruction_value = need;
    detail::resolve_existential(v, ctx, AuxBundleClass::Kind::O2, ctx.w1M, need);
    return v;
}

// Structure-dispatching entry point: chooses the condition that matches the
// mod-8 class of the metric signature, or the explicitly requested one.
inline ObstructionVerdict elementary_pinor_exists(const CohomologyContext& ctx,
                                                  const std::string& structure = "auto") {
    if (structure == "spin") return spin_obstruction(ctx);
    if (structure == "pin") return pin_untwisted_obstruction(ctx);
    if (structure == "pinq") return pinq_untwisted_obstruction(ctx);
    if (structure == "spinq") return spinq_obstruction(ctx);
    if (structure == "spino") return spino_obstruction(ctx);
    if (structure != "auto") throw input_error("unknown structure '" + structure + "'");
    switch (classify(Signature(ctx.p, ctx.q)).pq_mod8) {
        case 1: return spin_obstruction(ctx);
        case 3: case 7: return spino_obstruction(ctx);
        case 5: return spinq_obstruction(ctx);
        case 0: case 2: return pin_untwisted_obstruction(ctx);
        default: return pinq_untwisted_obstruction(ctx); // 4, 6
    }
}

// --- JSON input/output -------------------------------------------------------------

inline Gf2Vec parse_gf2_vec(const nlohmann::json& j, int rank, const std::string& name) {
    if (!j.is_array() || static_cast<int>(j.size()) != rank)
        throw input_error("class '" + name + "' must be an array of " + std::to_string(rank) + " bits");
    Gf2Vec v;
    for (const auto& e : j) {
        if (!e.is_number_integer() || (e.get<int>() != 0 && e.get<int>() != 1))
            throw input_error("class '" + name + "' must contain only 0/1 entries");
        v.push_back(e.get<int>());
    }
    return v;
}

inline CohomologyContext parse_context(const nlohmann::json& j) {
    CohomologyContext ctx;
    try {
        ctx.p = j.at("p").get<int>();
        ctx.q = j.at("q").get<int>();
        ctx.h1_rank = j.at("h1_rank").get<int>();
        ctx.h2_rank = j.at("h2_rank").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("bad context header: ") + e.what());
    }
    if (ctx.p < 0 || ctx.q < 0 || ctx.p + ctx.q < 1) throw input_error("context needs p,q >= 0 with p+q >= 1");
    if (ctx.h1_rank < 0 || ctx.h2_rank < 0) throw input_error("cohomology ranks must be non-negative");
    ctx.cup.assign(static_cast<std::size_t>(ctx.h1_rank),
                   std::vector<Gf2Vec>(static_cast<std::size_t>(ctx.h1_rank),
                                       gf2_zero_vec(ctx.h2_rank)));
    if (j.contains("cup")) {
        for (const auto& entry : j.at("cup")) {
            if (!entry.is_array() || entry.size() != 3)
                throw input_error("each cup entry must be [i, j, bits]");
            const int a = entry.at(0).get<int>(), b = entry.at(1).get<int>();
            if (a < 0 || a >= ctx.h1_rank || b < 0 || b >= ctx.h1_rank)
                throw input_error("cup entry index out of range");
            const Gf2Vec bits = parse_gf2_vec(entry.at(2), ctx.h2_rank, "cup entry");
            ctx.cup[a][b] = bits;
            ctx.cup[b][a] = bits;
        }
    }
    const auto& classes = j.at("classes");
    ctx.w1M = parse_gf2_vec(classes.at("w1M"), ctx.h1_rank, "w1M");
    ctx.w1p = parse_gf2_vec(classes.at("w1p"), ctx.h1_rank, "w1p");
    ctx.w1m = parse_gf2_vec(classes.at("w1m"), ctx.h1_rank, "w1m");
    ctx.w2p = parse_gf2_vec(classes.at("w2p"), ctx.h2_rank, "w2p");
    ctx.w2m = parse_gf2_vec(classes.at("w2m"), ctx.h2_rank, "w2m");
    if (j.contains("candidates")) {
        for (const auto& cj : j.at("candidates")) {
            AuxBundleClass c;
            const std::string kind = cj.at("kind").get<std::string>();
            if (kind == "SO3")
                c.kind = AuxBundleClass::Kind::SO3;
            else if (kind == "O2")
                c.kind = AuxBundleClass::Kind::O2;
            else
                throw input_error("candidate kind must be SO3 or O2");
            c.w1E = cj.contains("w1E") ? parse_gf2_vec(cj.at("w1E"), ctx.h1_rank, "w1E")
                                       : gf2_zero_vec(ctx.h1_rank);
            c.w2E = parse_gf2_vec(cj.at("w2E"), ctx.h2_rank, "w2E");
            if (c.kind == AuxBundleClass::Kind::SO3 && !gf2_is_zero(c.w1E))
                throw input_error("an SO3 candidate cannot carry w1E != 0");
            ctx.candidates.push_back(std::move(c));
        }
    }
    auto parse_names = [&](const char* key, int rank, const char* prefix) {
        std::vector<std::string> names;
        if (j.contains(key)) {
            for (const auto& n : j.at(key)) names.push_back(n.get<std::string>());
            if (static_cast<int>(names.size()) != rank)
                throw input_error(std::string(key) + " must list one name per generator");
        } else {
            for (int i = 1; i <= rank; ++i) names.push_back(prefix + std::to_string(i));
        }
        return names;
    };
    ctx.h1_names = parse_names("h1_names", ctx.h1_rank, "a");
    ctx.h2_names = parse_names("h2_names", ctx.h2_rank, "b");
    return ctx;
}

inline nlohmann::json verdict_to_json(const ObstructionVerdict& v) {
    nlohmann::json j;
    j["structure"] = v.structure;
    j["exists"] = to_string(v.exists);
    j["obstruction_value"] = v.obstruction_value;
    j["required_classes"] = v.required_classes;
    j["notes"] = v.notes;
    return j;
}

} // namespace cltk
