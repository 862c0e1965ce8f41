// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
//
// Each criterion is checked with exact arithmetic (tolerance 0); the timed
// criteria also enforce their runtime budgets.

#include <cltk/cltk.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace cltk;

namespace {

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int criterion, bool pass, const std::string& detail) {
    if (!pass) ++g_failures;
    std::printf("CRITERION %d: %s (%s)\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
}

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CLTK_BINARY_PATH) + " " + args + " 2>/dev/null";
    CliResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string fmt_time(double s) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f s", s);
    return buf;
}

MatrixRep canonical_rep(const Signature& sig) {
    return classify(sig).simple ? build_irrep(sig) : build_irrep(sig, +1);
}

// ---- criterion 1: volume-sign law on all 54 signatures with d <= 9 ----------

void criterion_volume_law() {
    const auto t0 = std::chrono::steady_clock::now();
    int checked = 0;
    bool ok = true;
    for (int d = 1; d <= 9 && ok; ++d)
        for (int p = 0; p <= d && ok; ++p) {
            const Signature sig(p, d - p);
            // Build nu directly as the ordered product of the generators.
            CliffordElement nu = CliffordElement::generator(sig, 1);
            for (int i = 2; i <= d; ++i) nu = nu * CliffordElement::generator(sig, i);
            const int sigma = ((d - p) + d / 2) % 2 == 0 ? +1 : -1;
            const int rev = (d / 2) % 2 == 0 ? +1 : -1;
            ok = ok && nu * nu == CliffordElement::scalar(sig, sigma);
            ok = ok && involution(nu, InvolutionKind::Reversion) == Rat(rev) * nu;
            ok = ok && volume_square_sign(sig) == sigma;
            ++checked;
        }
    const double dt = seconds_since(t0);
    report(1, ok && checked == 54 && dt < 10.0,
           std::to_string(checked) + " signatures, exact, " + fmt_time(dt) + " < 10 s");
}

// ---- criterion 2: classification table golden match --------------------------

void criterion_table_golden() {
    const auto t0 = std::chrono::steady_clock::now();
    const CliResult r = run_cli("table 8");
    std::ifstream golden(std::string(CLTK_SOURCE_DIR) + "/tests/golden/table8.csv");
    std::stringstream want;
    want << golden.rdbuf();
    const bool ok = golden.good() && r.exit_code == 0 && r.out == want.str() && !r.out.empty();
    report(2, ok, "`table 8` golden-file match, " + fmt_time(seconds_since(t0)));
}

// ---- criterion 3: representation structure ------------------------------------

bool check_rep_structure(const Signature& sig, std::string& err) {
    const ClassRecord rec = classify(sig);
    std::vector<MatrixRep> reps;
    if (rec.simple)
        reps.push_back(build_irrep(sig));
    else {
        reps.push_back(build_irrep(sig, +1));
        reps.push_back(build_irrep(sig, -1));
    }
    for (const MatrixRep& rep : reps) {
        if (rep.dim != minimal_irrep_dim(sig)) {
            err = sig.str() + ": wrong dimension";
            return false;
        }
        const int d = sig.d();
        for (int i = 0; i < d; ++i) {
            const SignedPerm sq = rep.gamma[i] * rep.gamma[i];
            const auto pm = sq.as_pm_identity();
            if (!pm || *pm != sig.metric_sign(i)) {
                err = sig.str() + ": generator square law fails";
                return false;
            }
            for (int j = i + 1; j < d; ++j) {
                const SignedPerm ab = rep.gamma[i] * rep.gamma[j];
                const SignedPerm ba = rep.gamma[j] * rep.gamma[i];
                if (ab.img != ba.img) {
                    err = sig.str() + ": anticommutation fails";
                    return false;
                }
                for (std::size_t k = 0; k < ab.sgn.size(); ++k)
                    if (ab.sgn[k] != -ba.sgn[k]) {
                        err = sig.str() + ": anticommutation fails";
                        return false;
                    }
            }
        }
        const SchurStructure schur = compute_schur(rep);
        if (schur.tag != rec.schur_tag ||
            static_cast<int>(schur.basis.size()) != schur_dim(rec.schur_tag)) {
            err = sig.str() + ": commutant dimension mismatch";
            return false;
        }
        if (!rec.simple) {
            const auto pm = rep.volume_image().as_pm_identity();
            if (!pm || *pm != *rep.eps) {
                err = sig.str() + ": volume image is not eps * identity";
                return false;
            }
        }
        const long long want_image = rec.simple ? (1LL << d) : (1LL << (d - 1));
        if (image_dimension(rep) != want_image) {
            err = sig.str() + ": image dimension mismatch";
            return false;
        }
    }
    return true;
}

void criterion_representations() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string err;
    for (int d = 1; d <= 8 && ok; ++d)
        for (int p = 0; p <= d && ok; ++p) ok = check_rep_structure(Signature(p, d - p), err);
    // High-signature spot checks, with the (1,10) runtime budget.
    if (ok) {
        const MatrixRep big = build_irrep(Signature(10, 1), +1);
        ok = big.dim == 32 && check_rep_structure(Signature(10, 1), err);
    }
    double big_dt = 0;
    if (ok) {
        const auto t1 = std::chrono::steady_clock::now();
        const MatrixRep big = build_irrep(Signature(1, 10));
        ok = big.dim == 64 && check_rep_structure(Signature(1, 10), err);
        big_dt = seconds_since(t1);
        ok = ok && big_dt < 60.0;
    }
    report(3, ok,
           ok ? "all p+q <= 8 plus (10,1) dim 32 and (1,10) dim 64; (1,10) in " + fmt_time(big_dt) +
                    " < 60 s; total " + fmt_time(seconds_since(t0))
              : err);
}

// ---- criterion 4: anticommutant and twisting element --------------------------

bool spans_equal(const std::vector<Mat>& a, const std::vector<Mat>& b) {
    if (a.empty() || b.empty()) return a.size() == b.size();
    const int n = a[0].rows();
    const int cols = n * n;
    Mat stack(static_cast<int>(a.size() + b.size()), cols);
    auto put = [&](const Mat& m, int row) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) stack(row, i * n + j) = m(i, j);
    };
    int row = 0;
    for (const Mat& m : a) put(m, row++);
    const long long rank_a = rank_gauss(stack);
    for (const Mat& m : b) put(m, row++);
    const long long rank_ab = rank_gauss(stack);
    return rank_a == static_cast<long long>(a.size()) &&
           rank_ab == rank_a; // b added nothing new and a was independent
}

void criterion_anticommutant() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string err;
    for (int d = 1; d <= 8 && ok; ++d)
        for (int p = 0; p <= d && ok; ++p) {
            const Signature sig(p, d - p);
            const ClassRecord rec = classify(sig);
            const MatrixRep rep = canonical_rep(sig);
            const AnticommutantStructure anti = compute_anticommutant(rep);
            const SchurStructure schur = compute_schur(rep);
            const std::size_t want =
                rec.simple ? static_cast<std::size_t>(schur_dim(rec.schur_tag)) : 0;
            if (anti.basis.size() != want) {
                ok = false;
                err = sig.str() + ": anticommutant dimension";
                break;
            }
            if (!rec.simple) continue;
            const Mat& u = *anti.unit;
            const Mat I = Mat::identity(rep.dim);
            if (!(u * u == Rat(*rec.alpha) * I)) {
                ok = false;
                err = sig.str() + ": u^2 != alpha * I";
                break;
            }
            for (const SignedPerm& gsp : rep.gamma) {
                const Mat g = gsp.to_mat();
                if (!(u * g == Rat(-1) * (g * u))) {
                    ok = false;
                    err = sig.str() + ": u fails to anticommute";
                }
            }
            // A(gamma) = S(gamma) u as a rank-one free module.
            std::vector<Mat> su;
            for (const Mat& s : schur.basis) su.push_back(s * u);
            if (ok && !spans_equal(anti.basis, su)) {
                ok = false;
                err = sig.str() + ": A != S u";
            }
            // Complex case: Ad_s(u) rotates u by the doubled angle on the
            // rational circle s = x + y J.
            if (ok && rec.schur_tag == SchurTag::C) {
                const Mat& J = schur.basis[1];
                for (const auto& [x, y] : {std::pair<Rat, Rat>{Rat(3, 5), Rat(4, 5)},
                                           {Rat(5, 13), Rat(12, 13)}, {Rat(1), Rat(0)}}) {
                    const Mat s = x * I + y * J;
                    const Mat s_inv = x * I - y * J; // unit circle inverse
                    const Mat lhs = s * u * s_inv;
                    const Mat rhs = (x * x - y * y) * u + Rat(2) * x * y * (J * u);
                    if (!(lhs == rhs)) {
                        ok = false;
                        err = sig.str() + ": circle adjoint law fails";
                    }
                }
            }
        }
    report(4, ok,
           ok ? "dim A, u^2 = alpha I, and A = S u verified for all d <= 8; " +
                    fmt_time(seconds_since(t0))
              : err);
}

// ---- criterion 5: canonical pairing --------------------------------------------

void criterion_pairing() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string err;
    for (int d = 1; d <= 7 && ok; ++d)
        for (int p = 0; p <= d && ok; ++p) {
            const Signature sig(p, d - p);
            const ClassRecord rec = classify(sig);
            const MatrixRep rep = canonical_rep(sig);
            try {
                const BilinearForm bf = find_canonical_pairing(rep); // asserts 1-dim space
                if (bf.type != rec.eps_e) {
                    ok = false;
                    err = sig.str() + ": type != eps_e";
                }
                const Mat omega = rep.volume_image().to_mat();
                const Mat omega_inv = rep.volume_image().inverse().to_mat();
                if (ok && !(improved_transpose(bf, omega) == Rat(rec.beta) * omega_inv)) {
                    ok = false;
                    err = sig.str() + ": omega transpose law fails";
                }
            } catch (const std::exception& e) {
                ok = false;
                err = sig.str() + ": " + e.what();
            }
        }
    report(5, ok,
           ok ? "unique pairing, eps_e, and the omega law for all d <= 7; " +
                    fmt_time(seconds_since(t0))
              : err);
}

// ---- criterion 6: sampled Lipschitz laws ----------------------------------------

void criterion_lipschitz() {
    const auto t0 = std::chrono::steady_clock::now();
    const int samples = 100;
    int total_reports = 0;
    bool ok = true;
    std::string err;
    for (int d = 1; d <= 6 && ok; ++d)
        for (int p = 0; p <= d && ok; ++p) {
            const Signature sig(p, d - p);
            const MatrixRep rep = canonical_rep(sig);
            std::vector<PropertyReport> reports = lipschitz_property_battery(rep, samples, kDefaultSeed);
            for (PropertyReport& r : verify_group_identification(rep, samples, kDefaultSeed))
                reports.push_back(std::move(r));
            if (classify(sig).simple)
                for (PropertyReport& r : twisted_automorphism_check(rep, samples, kDefaultSeed))
                    reports.push_back(std::move(r));
            for (const PropertyReport& r : reports) {
                ++total_reports;
                if (!r.passed) {
                    ok = false;
                    err = r.property + " on " + sig.str() + ": " + r.counterexample;
                }
            }
        }
    report(6, ok,
           ok ? std::to_string(total_reports) + " property reports, " + std::to_string(samples) +
                    " samples each, zero failures; " + fmt_time(seconds_since(t0))
              : err);
}

// ---- criterion 7: obstruction suite ----------------------------------------------

CohomologyContext fixture_context(const std::string& name, bool& ok) {
    std::ifstream in(std::string(CLTK_SOURCE_DIR) + "/tests/fixtures/" + name);
    nlohmann::json j;
    if (!in.good()) {
        ok = false;
        return CohomologyContext{};
    }
    in >> j;
    return parse_context(j);
}

void criterion_obstructions() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string err;

    // (i) (10,1): verdict iff (w1M = 0 and w2p = 0), over a torus-like ring.
    for (int w1p_bits = 0; w1p_bits < 4 && ok; ++w1p_bits)
        for (int w1m_bits = 0; w1m_bits < 4 && ok; ++w1m_bits)
            for (int w2p_bit = 0; w2p_bit < 2 && ok; ++w2p_bit) {
                nlohmann::json j = {
                    {"p", 10},
                    {"q", 1},
                    {"h1_rank", 2},
                    {"h2_rank", 1},
                    {"cup", {{0, 1, {1}}}},
                    {"classes",
                     {{"w1p", {w1p_bits & 1, (w1p_bits >> 1) & 1}},
                      {"w1m", {w1m_bits & 1, (w1m_bits >> 1) & 1}},
                      {"w1M", {(w1p_bits ^ w1m_bits) & 1, ((w1p_bits ^ w1m_bits) >> 1) & 1}},
                      {"w2p", {w2p_bit}},
                      {"w2m", {0}}}},
                };
                const CohomologyContext ctx = parse_context(j);
                const ObstructionVerdict v = elementary_pinor_exists(ctx);
                const bool expect = (w1p_bits ^ w1m_bits) == 0 && w2p_bit == 0;
                if (v.structure != "spin" || (v.exists == Existence::Yes) != expect) {
                    ok = false;
                    err = "(10,1) spin criterion sweep";
                }
            }

    // (ii) RP^2 fixtures: untwisted Pin fails for (2,0), succeeds for (0,2).
    if (ok) {
        const CohomologyContext plus = fixture_context("rp2_20.json", ok);
        const CohomologyContext minus = fixture_context("rp2_02.json", ok);
        if (ok) {
            const ObstructionVerdict vp = pin_untwisted_obstruction(plus);
            const ObstructionVerdict vm = pin_untwisted_obstruction(minus);
            if (vp.exists != Existence::No || vm.exists != Existence::Yes) {
                ok = false;
                err = "RP^2 pin verdicts";
            }
        }
    }

    // (iii) torus fixtures: every structure exists with trivial candidates.
    if (ok)
        for (const char* name :
             {"torus1_10.json", "torus1_01.json", "torus2_20.json", "torus2_11.json",
              "torus2_02.json", "torus3_30.json", "torus3_03.json", "torus4_40.json"}) {
            const CohomologyContext ctx = fixture_context(name, ok);
            if (!ok || elementary_pinor_exists(ctx).exists != Existence::Yes) {
                ok = false;
                err = std::string("torus fixture ") + name;
                break;
            }
        }

    // (iv) the self-cup coefficient against direct mod-2 arithmetic, d <= 11.
    if (ok) {
        int checked = 0;
        for (int d = 1; d <= 11 && ok; ++d)
            for (int p = 0; p <= d; ++p) {
                const int q = d - p;
                const int r = ((p - q) % 8 + 8) % 8;
                if (r != 3 && r != 7) continue;
                const int direct =
                    (((p - q + 1) / 4 % 2 + 2) + p * (p + 1) / 2 + q * (q + 1) / 2) % 2;
                if (spino_self_cup_coefficient(p, q) != direct) {
                    ok = false;
                    err = "spino coefficient at (" + std::to_string(p) + "," + std::to_string(q) + ")";
                    break;
                }
                ++checked;
            }
        if (ok && checked == 0) {
            ok = false;
            err = "spino coefficient sweep was empty";
        }
    }

    report(7, ok,
           ok ? "spin criterion sweep, RP^2 pin dictionary, tori, spino coefficient; " +
                    fmt_time(seconds_since(t0))
              : err);
}

// ---- criterion 8: hyperbolic module ----------------------------------------------

void criterion_hyperbolic() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::vector<Rat> grid;
    for (int n = -20; n <= 20; ++n) grid.push_back(Rat(n) / 4); // 41 points, -5 .. 5
    std::vector<Hyperbolic> pts;
    for (const Rat& x : grid)
        for (const Rat& y : grid) pts.emplace_back(x, y);
    // Pairwise multiplicativity of the modulus and the diagonalization,
    // exhaustive over all pairs of grid points.
    for (std::size_t i = 0; i < pts.size() && ok; ++i)
        for (std::size_t j = 0; j < pts.size() && ok; ++j) {
            const Hyperbolic z = pts[i], w = pts[j];
            const Hyperbolic prod = z * w;
            if (prod.modulus() != z.modulus() * w.modulus()) ok = false;
            const auto [zu, zv] = z.diag();
            const auto [wu, wv] = w.diag();
            const auto [pu, pv] = prod.diag();
            if (pu != zu * wu || pv != zv * wv) ok = false;
        }
    // Component table exhaustively on the full grid.
    for (const Hyperbolic& z : pts) {
        const Rat m = z.modulus();
        const UnitComponent c = unit_component(z);
        if (m != 1 && m != -1) {
            if (c != UnitComponent::NotAUnit) ok = false;
            continue;
        }
        const auto [u, v] = z.diag();
        const UnitComponent expect = u > 0 ? (v > 0 ? UnitComponent::PlusPlus : UnitComponent::PlusMinus)
                                           : (v > 0 ? UnitComponent::MinusPlus : UnitComponent::MinusMinus);
        if (c != expect) ok = false;
    }
    // Named points.
    ok = ok && Hyperbolic::j().diag() == std::pair<Rat, Rat>{Rat(1), Rat(-1)};
    ok = ok && unit_component(Hyperbolic::j()) == UnitComponent::PlusMinus;
    ok = ok && unit_component(-Hyperbolic::one()) == UnitComponent::MinusMinus;
    ok = ok && unit_component(-Hyperbolic::j()) == UnitComponent::MinusPlus;
    ok = ok && unit_component(Hyperbolic::one()) == UnitComponent::PlusPlus;
    ok = ok && Hyperbolic::j() * Hyperbolic::j() == Hyperbolic::one();
    report(8, ok, "41x41 rational grid plus named points; " + fmt_time(seconds_since(t0)));
}

// ---- criterion 9: end-to-end property suite ---------------------------------------

void criterion_verify_all() {
    const auto t0 = std::chrono::steady_clock::now();
    const CliResult r = run_cli("verify --all --seed 7");
    const double dt = seconds_since(t0);
    bool ok = r.exit_code == 0 && dt < 300.0;
    if (ok) {
        try {
            const nlohmann::json doc = nlohmann::json::parse(r.out);
            ok = doc.is_array() && !doc.empty();
            for (const auto& item : doc)
                if (item.at("status") != "pass") ok = false;
        } catch (...) {
            ok = false;
        }
    }
    report(9, ok, "`verify --all --seed 7` exit " + std::to_string(r.exit_code) + ", " +
                      fmt_time(dt) + " < 300 s");
}

} // namespace

int main() {
    criterion_volume_law();
    criterion_table_golden();
    criterion_representations();
    criterion_anticommutant();
    criterion_pairing();
    criterion_lipschitz();
    criterion_obstructions();
    criterion_hyperbolic();
    criterion_verify_all();
    std::printf("ACCEPTANCE: %d/9 PASS\n", 9 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
