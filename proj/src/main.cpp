// cltk — command-line front end for the real Clifford algebra toolkit.
//
// Verbs: classify, table, irrep, pairing, verify, obstruct, hyp.
// Exit codes: 0 = computed answer (including negative verdicts such as
// "structure does not exist"), 2 = input/usage error, 3 = internal assertion
// failure. Sampling verbs take --seed (default 12345).

#include <CLI11.hpp>
#include <cltk/cltk.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace cltk;

int parse_eps_flag(const std::string& text) {
    if (text == "+1" || text == "1") return +1;
    if (text == "-1") return -1;
    throw input_error("--eps must be +1 or -1 (got '" + text + "')");
}

std::string classify_line(const ClassRecord& r) {
    std::ostringstream os;
    os << "p=" << r.sig.p << " q=" << r.sig.q << " d=" << r.sig.d()
       << " pq_mod8=" << r.pq_mod8 << " type=" << to_string(r.case_type)
       << " simple=" << (r.simple ? "true" : "false") << " S=" << to_string(r.schur_tag)
       << " nu_sq=" << sign_str(r.volume_square) << " T=" << r.pseudocenter_tag
       << " alpha=" << (r.alpha ? sign_str(*r.alpha) : std::string("undefined"))
       << " beta=" << sign_str(r.beta) << " eps_d=" << sign_str(r.eps_d)
       << " eps_e=" << sign_str(r.eps_e) << " Pin_e=" << r.extended_pin_name
       << " Lambda=" << r.canonical_spinor_name << " reduced_L=" << r.reduced_lipschitz_name;
    return os.str();
}

MatrixRep build_requested_rep(int p, int q, const std::string& eps_text) {
    const Signature sig(p, q);
    if (eps_text.empty()) return build_irrep(sig);
    return build_irrep(sig, parse_eps_flag(eps_text));
}

// Structural checks behind `irrep --verify`: relations are rechecked on every
// build, so this focuses on the derived invariants of the finished module.
void verify_rep(const MatrixRep& rep) {
    const ClassRecord rec = classify(rep.sig);
    const SchurStructure schur = compute_schur(rep);
    if (schur.tag != rec.schur_tag) throw internal_error("commutant type mismatch");
    const AnticommutantStructure anti = compute_anticommutant(rep);
    const std::size_t want_anti = rec.simple ? static_cast<std::size_t>(schur_dim(rec.schur_tag)) : 0;
    if (anti.basis.size() != want_anti) throw internal_error("anticommutant dimension mismatch");
    const long long want_image = rec.simple ? (1LL << rep.sig.d()) : (1LL << (rep.sig.d() - 1));
    if (image_dimension(rep) != want_image) throw internal_error("image dimension mismatch");
    const SignedPerm vol = rep.volume_image();
    const auto pm = vol.as_pm_identity();
    if (rec.simple) {
        if (rep.sig.d() % 2 == 1 && pm) throw internal_error("volume image degenerated to a scalar");
    } else {
        if (!pm || *pm != *rep.eps) throw internal_error("volume image does not match eps");
        const MatrixRep twin = twin_irrep(rep);
        if (!intertwiner_basis(rep, twin).empty())
            throw internal_error("twin representations are unexpectedly equivalent");
    }
}

int cmd_irrep(int p, int q, const std::string& eps_text, bool verify, const std::string& export_path,
              const std::string& import_path) {
    MatrixRep rep = [&] {
        if (import_path.empty()) return build_requested_rep(p, q, eps_text);
        std::ifstream in(import_path);
        if (!in) throw input_error("cannot open '" + import_path + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        MatrixRep r = import_rep(buf.str());
        if (r.sig != Signature(p, q))
            throw input_error("imported file has signature " + r.sig.str() +
                              ", not " + Signature(p, q).str());
        if (!eps_text.empty() && (!r.eps || *r.eps != parse_eps_flag(eps_text)))
            throw input_error("imported file does not match the requested --eps");
        return r;
    }();
    if (!export_path.empty()) {
        std::ofstream out(export_path);
        if (!out) throw input_error("cannot write '" + export_path + "'");
        out << export_rep(rep);
    }
    if (verify) {
        verify_rep(rep);
        std::cout << "dim=" << rep.dim << ", all checks passed\n";
    } else {
        std::cout << "dim=" << rep.dim << "\n";
    }
    return 0;
}

int cmd_pairing(int p, int q, const std::string& eps_text) {
    const MatrixRep rep = build_requested_rep(p, q, eps_text);
    const BilinearForm bf = find_canonical_pairing(rep);
    std::cout << "dim=" << rep.dim << "\n"
              << "sym=" << sign_str(bf.sym) << "\n"
              << "type=" << sign_str(bf.type) << "\n"
              << "B:\n";
    for (int i = 0; i < bf.B.rows(); ++i) {
        for (int j = 0; j < bf.B.cols(); ++j) std::cout << (j ? " " : "") << rat_str(bf.B(i, j));
        std::cout << "\n";
    }
    return 0;
}

nlohmann::json report_to_json(const PropertyReport& r) {
    nlohmann::json j;
    j["property"] = r.property;
    j["signature"] = r.sig.str();
    j["samples"] = r.samples;
    j["status"] = r.passed ? "pass" : "fail";
    if (!r.passed) j["counterexample"] = r.counterexample;
    return j;
}

int cmd_verify(bool all, int p, int q, int samples, std::uint64_t seed) {
    std::vector<Signature> sigs;
    if (all) {
        for (int d = 1; d <= 6; ++d)
            for (int pp = d; pp >= 0; --pp) sigs.emplace_back(pp, d - pp);
    } else {
        sigs.emplace_back(p, q);
    }
    nlohmann::json out = nlohmann::json::array();
    bool ok = true;
    for (const Signature& sig : sigs) {
        const ClassRecord rec = classify(sig);
        const MatrixRep rep = rec.simple ? build_irrep(sig) : build_irrep(sig, +1);
        std::vector<PropertyReport> reports = lipschitz_property_battery(rep, samples, seed);
        for (PropertyReport& r : verify_group_identification(rep, samples, seed))
            reports.push_back(std::move(r));
        if (rec.simple)
            for (PropertyReport& r : twisted_automorphism_check(rep, samples, seed))
                reports.push_back(std::move(r));
        for (const PropertyReport& r : reports) {
            ok = ok && r.passed;
            out.push_back(report_to_json(r));
        }
    }
    std::cout << out.dump(2) << "\n";
    if (!ok) throw internal_error("property verification failed; see report above");
    return 0;
}

std::string structure_description(const std::string& structure) {
    if (structure == "spin") return "Spin";
    if (structure == "pin") return "untwisted Pin";
    if (structure == "pinq") return "untwisted Pin^q";
    if (structure == "spinq") return "Spin^q";
    return "Spin^o"; // spino
}

int cmd_obstruct(const std::string& path, const std::string& structure, bool as_json) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("bad JSON in '") + path + "': " + e.what());
    }
    const CohomologyContext ctx = parse_context(doc);
    const ObstructionVerdict v = elementary_pinor_exists(ctx, structure);
    if (as_json) {
        std::cout << verdict_to_json(v).dump(2) << "\n";
        return 0;
    }
    const std::string desc = structure_description(v.structure);
    const bool existential = v.structure == "spinq" || v.structure == "pinq" || v.structure == "spino";
    std::string headline;
    if (v.exists == Existence::Yes) {
        headline = existential ? "EXISTS (" + desc + " condition satisfied by an auxiliary bundle)"
                               : "EXISTS (" + desc + " obstruction = 0)";
    } else if (v.exists == Existence::No) {
        const bool nonorientable =
            (v.structure == "spin" || v.structure == "spinq") && !gf2_is_zero(ctx.w1M);
        headline = nonorientable
                       ? "NOT EXISTS (w1M = " + render_h1(ctx, ctx.w1M) + " != 0)"
                       : "NOT EXISTS (" + desc + " obstruction = " + render_h2(ctx, v.obstruction_value) + ")";
    } else {
        headline = "CONDITIONAL (requires " +
                   (v.required_classes.empty() ? std::string("an auxiliary bundle")
                                               : v.required_classes.front()) +
                   ")";
    }
    std::cout << "elementary pinor bundle: " << headline << "\n";
    for (const auto& r : v.required_classes) std::cout << "  requires: " << r << "\n";
    for (const auto& n : v.notes) std::cout << "  note: " << n << "\n";
    return 0;
}

int cmd_hyp(const std::string& xs, const std::string& ys) {
    const Hyperbolic z{parse_rat(xs), parse_rat(ys)};
    const auto [u, w] = z.diag();
    std::cout << "z = " << z.str() << "\n"
              << "conj(z) = " << z.conj().str() << "\n"
              << "M(z) = " << rat_str(z.modulus()) << "\n"
              << "phi(z) = (" << rat_str(u) << ", " << rat_str(w) << ")\n"
              << "component = " << to_string(unit_component(z)) << "\n";
    if (z.is_invertible())
        std::cout << "inverse = " << z.inverse().str() << "\n";
    else
        std::cout << "inverse = none (zero divisor)\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cltk: exact-arithmetic toolkit for real Clifford algebras Cl(p,q)"};
    app.require_subcommand(1);

    int p = 0, q = 0, range_d = 1, samples = 100;
    std::uint64_t seed = cltk::kDefaultSeed;
    std::string eps_text, export_path, import_path, input_path, xs, ys;
    std::string structure = "auto";
    bool do_verify = false, all_sigs = false, as_json = false;

    auto* c_classify = app.add_subcommand("classify", "One-line classification record for Cl(p,q)");
    c_classify->add_option("p", p, "number of +1 generators")->required();
    c_classify->add_option("q", q, "number of -1 generators")->required();

    auto* c_table = app.add_subcommand("table", "CSV classification table for all p+q <= range_d");
    c_table->add_option("range_d", range_d, "maximum total dimension")->required();

    auto* c_irrep = app.add_subcommand("irrep", "Build (or import) an irreducible representation");
    c_irrep->add_option("p", p, "number of +1 generators")->required();
    c_irrep->add_option("q", q, "number of -1 generators")->required();
    c_irrep->add_option("--eps", eps_text, "volume sign +1/-1 (required iff Cl(p,q) is non-simple)");
    c_irrep->add_flag("--verify", do_verify, "run structural checks on the result");
    c_irrep->add_option("--export", export_path, "write the representation to FILE");
    c_irrep->add_option("--import", import_path, "read and validate a representation from FILE");

    auto* c_pairing = app.add_subcommand("pairing", "Canonical bilinear pairing of the irrep");
    c_pairing->add_option("p", p, "number of +1 generators")->required();
    c_pairing->add_option("q", q, "number of -1 generators")->required();
    c_pairing->add_option("--eps", eps_text, "volume sign for non-simple signatures");

    auto* c_verify = app.add_subcommand("verify", "Sampled verification of the Lipschitz-group laws");
    c_verify->add_option("p", p, "number of +1 generators");
    c_verify->add_option("q", q, "number of -1 generators");
    c_verify->add_flag("--all", all_sigs, "verify every signature with p+q <= 6");
    c_verify->add_option("--samples", samples, "samples per property (default 100)");
    c_verify->add_option("--seed", seed, "RNG seed (default 12345)");

    auto* c_obstruct = app.add_subcommand("obstruct", "Evaluate pinor-bundle obstructions on a context");
    c_obstruct->add_option("--input", input_path, "JSON cohomology context")->required();
    c_obstruct->add_option("--structure", structure, "auto|spin|pin|pinq|spinq|spino (default auto)");
    c_obstruct->add_flag("--json", as_json, "emit the verdict as JSON");

    auto* c_hyp = app.add_subcommand("hyp", "Hyperbolic-number arithmetic (j^2 = +1)");
    c_hyp->add_option("x", xs, "real part (rational)")->required();
    c_hyp->add_option("y", ys, "j coefficient (rational)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << "run with --help for usage\n";
        return 2;
    }

    try {
        if (*c_classify) {
            std::cout << classify_line(cltk::classify(cltk::Signature(p, q))) << "\n";
            return 0;
        }
        if (*c_table) {
            std::cout << cltk::emit_tables(range_d);
            return 0;
        }
        if (*c_irrep) return cmd_irrep(p, q, eps_text, do_verify, export_path, import_path);
        if (*c_pairing) return cmd_pairing(p, q, eps_text);
        if (*c_verify) {
            if (!all_sigs && c_verify->count("p") + c_verify->count("q") < 2)
                throw cltk::input_error("verify needs either `p q` or --all");
            return cmd_verify(all_sigs, p, q, samples, seed);
        }
        if (*c_obstruct) return cmd_obstruct(input_path, structure, as_json);
        if (*c_hyp) return cmd_hyp(xs, ys);
        throw cltk::input_error("no verb selected");
    } catch (const cltk::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const cltk::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cltk::resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
