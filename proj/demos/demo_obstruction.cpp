// Demo: decide existence of elementary pinor bundles over a Klein-bottle-like
// base for two metric signatures on the same rank-2 tangent bundle.

#include <cltk/cltk.hpp>
#include <nlohmann/json.hpp>

#include <iostream>

int main() {
    using namespace cltk;

    // H^1 = <a, b> with a^2 = ab (Klein bottle), H^2 = <ab>.
    // The tangent bundle has w1 = a^2-generator coefficient... classes below.
    for (int positive_definite : {1, 0}) {
        nlohmann::json j = {
            {"p", positive_definite ? 2 : 0},
            {"q", positive_definite ? 0 : 2},
            {"h1_rank", 2},
            {"h2_rank", 1},
            {"h1_names", {"a", "b"}},
            {"h2_names", {"ab"}},
            {"cup", {{0, 0, {1}}, {0, 1, {1}}, {1, 1, {0}}}},
            {"classes",
             {{"w1M", {1, 0}},
              {"w1p", {positive_definite ? 1 : 0, 0}},
              {"w1m", {positive_definite ? 0 : 1, 0}},
              {"w2p", {0}},
              {"w2m", {0}}}},
        };
        const CohomologyContext ctx = parse_context(j);
        const ObstructionVerdict v = elementary_pinor_exists(ctx);
        std::cout << "signature (" << ctx.p << "," << ctx.q << "): structure " << v.structure
                  << ", verdict " << to_string(v.exists) << ", obstruction "
                  << render_h2(ctx, v.obstruction_value) << "\n";
        for (const auto& note : v.notes) std::cout << "  " << note << "\n";
    }
    return 0;
}
