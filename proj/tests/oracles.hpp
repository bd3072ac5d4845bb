#ifndef TORICGB_TESTS_ORACLES_HPP
#define TORICGB_TESTS_ORACLES_HPP

// Test-only oracles, deliberately written along different lines than the
// library paths they check.

#include <algorithm>
#include <queue>
#include <set>

#include "toricgb/lattice.hpp"

namespace toricgb::testing {

inline Configuration example_a1a3() {
    return validate_configuration(4, 2, {{4, 0}, {3, 1}, {1, 3}, {0, 4}});
}

inline Configuration remark_c1b() {
    return validate_configuration(3, 3,
                                  {{2, 0, 1}, {1, 2, 0}, {1, 1, 1}, {1, 0, 2}, {0, 2, 1}, {0, 1, 2}});
}

inline Configuration full_config(std::int64_t alpha, std::int64_t d) {
    return validate_configuration(alpha, d, enumerate_simplex_points(alpha, d));
}

// group membership by BFS closure of +-generators inside a box wide enough
// that every inner-box target is reachable without leaving it
struct BfsLattice {
    std::set<LatticeVector> members;
    std::int64_t radius;

    BfsLattice(const Configuration& cfg, std::int64_t inner_radius) {
        radius = inner_radius + cfg.d * cfg.alpha;
        std::vector<LatticeVector> steps;
        for (const auto& g : cfg.generators()) {
            steps.push_back(g);
            LatticeVector neg(g.size());
            for (std::size_t i = 0; i < g.size(); ++i) neg[i] = -g[i];
            steps.push_back(neg);
        }
        std::queue<LatticeVector> frontier;
        LatticeVector zero(static_cast<std::size_t>(cfg.d), 0);
        members.insert(zero);
        frontier.push(zero);
        while (!frontier.empty()) {
            LatticeVector cur = frontier.front();
            frontier.pop();
            for (const auto& s : steps) {
                LatticeVector nxt = vec_add(cur, s);
                bool inside = std::all_of(nxt.begin(), nxt.end(),
                                          [&](std::int64_t x) { return -radius <= x && x <= radius; });
                if (inside && members.insert(nxt).second) frontier.push(nxt);
            }
        }
    }
};

// all sums of exactly n generators, by direct recursion over combinations
// with repetition
inline std::set<LatticeVector> brute_force_piece(const Configuration& cfg, std::int64_t n) {
    std::set<LatticeVector> out;
    auto gens = cfg.generators();
    LatticeVector acc(static_cast<std::size_t>(cfg.d), 0);
    auto rec = [&](auto&& self, std::size_t from, std::int64_t left) -> void {
        if (left == 0) {
            out.insert(acc);
            return;
        }
        for (std::size_t i = from; i < gens.size(); ++i) {
            for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += gens[i][j];
            self(self, i, left - 1);
            for (std::size_t j = 0; j < acc.size(); ++j) acc[j] -= gens[i][j];
        }
    };
    rec(rec, 0, n);
    return out;
}

}  // namespace toricgb::testing

#endif
