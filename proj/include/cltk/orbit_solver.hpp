#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace cltk {

// Solver for linear systems whose every equation has the shape
//     x[a] = sign * x[b]        (sign = +-1)
//
// Systems of this shape arise whenever the coefficient matrices are signed
// permutations: commutants, anticommutants, intertwiners, invariant
// pairings, and center computations all reduce to them.  Union-find with a
// sign on each link solves the system in near-linear time; a component
// containing a contradictory cycle (x = -x) collapses to zero.  The solution
// space basis is one +-1-sparse vector per surviving component.
class OrbitSolver {
  public:
    explicit OrbitSolver(std::size_t n) : parent_(n), sign_(n, +1), dead_(n, false) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
    }

    std::size_t size() const { return parent_.size(); }

    // Impose x[a] = s * x[b].
    void relate(std::size_t a, std::size_t b, int s) {
        auto [ra, sa] = find(a);
        auto [rb, sb] = find(b);
        if (ra == rb) {
            if (sa != s * sb) dead_[ra] = true;
            return;
        }
        parent_[ra] = rb;
        sign_[ra] = sa * s * sb;
        if (dead_[ra]) dead_[rb] = true;
    }

    // Impose x[a] = 0.
    void kill(std::size_t a) { dead_[find(a).first] = true; }

    // Sparse basis of the solution space: for each live component (ordered by
    // its smallest member) one vector, entries listed as (index, sign) in
    // ascending index order, normalized so the smallest index carries +1.
    std::vector<std::vector<std::pair<std::size_t, int>>> basis() {
        const std::size_t n = size();
        std::vector<std::vector<std::pair<std::size_t, int>>> by_root(n);
        for (std::size_t e = 0; e < n; ++e) {
            auto [r, s] = find(e);
            if (!dead_[r]) by_root[r].emplace_back(e, s);
        }
        // Order components by smallest member; entries are already ascending.
        std::vector<std::pair<std::size_t, std::size_t>> order; // (smallest member, root)
        for (std::size_t r = 0; r < n; ++r)
            if (!by_root[r].empty()) order.emplace_back(by_root[r].front().first, r);
        std::sort(order.begin(), order.end());
        std::vector<std::vector<std::pair<std::size_t, int>>> out;
        out.reserve(order.size());
        for (auto& [first, r] : order) {
            auto vec = by_root[r];
            const int s0 = vec.front().second;
            for (auto& [e, s] : vec) s *= s0;
            out.push_back(std::move(vec));
        }
        return out;
    }

    std::size_t dimension() { return basis().size(); }

  private:
    // Returns (root, s) with x[a] = s * x[root]; compresses the path.
    std::pair<std::size_t, int> find(std::size_t a) {
        if (parent_[a] == a) return {a, +1};
        auto [root, s_parent] = find(parent_[a]); // x[parent] = s_parent * x[root]
        parent_[a] = root;
        sign_[a] *= s_parent;
        return {root, sign_[a]};
    }

    std::vector<std::size_t> parent_;
    std::vector<int> sign_;
    std::vector<bool> dead_;
};

} // namespace cltk
