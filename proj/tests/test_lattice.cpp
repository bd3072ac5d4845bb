#include <doctest.h>

#include "oracles.hpp"
#include "toricgb/lattice.hpp"

using namespace toricgb;
using testing::BfsLattice;
using testing::example_a1a3;
using testing::full_config;

TEST_CASE("simplex point enumeration") {
    auto pts22 = enumerate_simplex_points(2, 2);
    CHECK(pts22 == std::vector<LatticeVector>{{2, 0}, {1, 1}, {0, 2}});
    CHECK(enumerate_simplex_points(3, 3).size() == 10);
    CHECK(enumerate_simplex_points(3, 4).size() == 20);

    for (std::int64_t alpha = 1; alpha <= 8; ++alpha)
        for (std::int64_t d = 1; d <= 5; ++d)
            CHECK(static_cast<std::int64_t>(enumerate_simplex_points(alpha, d).size()) ==
                  binomial_coefficient(alpha + d - 1, d - 1));
}

TEST_CASE("configuration validation") {
    Configuration cfg = example_a1a3();
    CHECK(cfg.c == 2);
    CHECK(cfg.a_points == std::vector<LatticeVector>{{3, 1}, {1, 3}});
    CHECK(cfg.e_points == std::vector<LatticeVector>{{4, 0}, {0, 4}});
    CHECK_FALSE(cfg.warn_gcd);
    CHECK_FALSE(cfg.warn_c1);

    SUBCASE("wrong coordinate sum") {
        CHECK_THROWS_AS(validate_configuration(4, 2, {{2, 1}}), InputError);
    }
    SUBCASE("negative entry") {
        CHECK_THROWS_AS(validate_configuration(4, 2, {{5, -1}}), InputError);
    }
    SUBCASE("wrong length") {
        CHECK_THROWS_AS(validate_configuration(4, 2, {{2, 1, 1}}), InputError);
    }
    SUBCASE("empty a-list") {
        CHECK_THROWS_AS(validate_configuration(4, 2, {{4, 0}, {0, 4}}), InputError);
        CHECK_THROWS_AS(validate_configuration(4, 2, {}), InputError);
    }
    SUBCASE("corners always adjoined, single a-point warns") {
        Configuration c1 = validate_configuration(4, 2, {{3, 1}});
        CHECK(c1.c == 1);
        CHECK(c1.warn_c1);
        CHECK(c1.e_points.size() == 2);
    }
    SUBCASE("common factor warns but validates") {
        Configuration c2 = validate_configuration(4, 2, {{2, 2}});
        CHECK(c2.warn_gcd);
    }
    SUBCASE("duplicates get dropped") {
        Configuration c3 = validate_configuration(4, 2, {{3, 1}, {3, 1}, {1, 3}});
        CHECK(c3.c == 2);
    }
    SUBCASE("explicit ordering is preserved when asked") {
        Configuration c4 = validate_configuration(4, 2, {{1, 3}, {3, 1}}, PointOrdering::AsGiven);
        CHECK(c4.a_points == std::vector<LatticeVector>{{1, 3}, {3, 1}});
    }
}

TEST_CASE("lattice index on known configurations") {
    CHECK(lattice_index(example_a1a3()) == 4);
    CHECK(lattice_index(validate_configuration(2, 2, {{1, 1}})) == 2);
    for (std::int64_t alpha = 2; alpha <= 5; ++alpha)
        for (std::int64_t d = 2; d <= 4; ++d) CHECK(lattice_index(full_config(alpha, d)) == alpha);
}

TEST_CASE("lattice membership agrees with the BFS closure oracle") {
    auto check_config = [](const Configuration& cfg) {
        LatticeBasis basis = lattice_basis(cfg);
        BfsLattice oracle(cfg, cfg.alpha);
        LatticeVector v(static_cast<std::size_t>(cfg.d), 0);
        auto scan = [&](auto&& self, std::size_t pos) -> void {
            if (pos == v.size()) {
                CHECK(basis.contains(v) == (oracle.members.count(v) > 0));
                return;
            }
            for (std::int64_t x = -cfg.alpha; x <= cfg.alpha; ++x) {
                v[pos] = x;
                self(self, pos + 1);
            }
            v[pos] = 0;
        };
        scan(scan, 0);
    };

    // every configuration for the smallest parameters
    for (auto [alpha, d] : {std::pair<std::int64_t, std::int64_t>{2, 2}, {3, 2}, {2, 3}, {3, 3}}) {
        std::vector<LatticeVector> nonvertex;
        for (const auto& p : enumerate_simplex_points(alpha, d))
            if (std::find(p.begin(), p.end(), alpha) == p.end()) nonvertex.push_back(p);
        std::size_t n = nonvertex.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<LatticeVector> pts;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::uint64_t{1} << i)) pts.push_back(nonvertex[i]);
            check_config(validate_configuration(alpha, d, pts));
        }
    }
    // sampled configurations at the top of the desk range
    std::vector<Configuration> sampled = {
        example_a1a3(),
        validate_configuration(4, 3, {{3, 1, 0}, {0, 2, 2}}),
        validate_configuration(4, 3, {{2, 2, 0}, {2, 0, 2}}),
        validate_configuration(4, 2, {{2, 2}}),
        full_config(4, 3),
    };
    for (const auto& cfg : sampled) check_config(cfg);
}

TEST_CASE("degree of the ring") {
    CHECK(degree_of_ring(example_a1a3()) == 4);
    CHECK(degree_of_ring(validate_configuration(2, 2, {{1, 1}})) == 2);
    for (std::int64_t alpha = 2; alpha <= 5; ++alpha)
        for (std::int64_t d = 2; d <= 4; ++d) {
            std::int64_t deg = degree_of_ring(full_config(alpha, d));
            std::int64_t expected = 1;
            for (std::int64_t i = 1; i < d; ++i) expected *= alpha;
            CHECK(deg == expected);
        }
    CHECK(degree_of_ring(testing::remark_c1b()) == 9);

    // a common coordinate factor rescales the picture: deg need not be a
    // multiple of the nominal alpha, and that is a warning case, not an error
    Configuration scaled = validate_configuration(4, 2, {{2, 2}});
    CHECK(scaled.warn_gcd);
    CHECK(degree_of_ring(scaled) == 2);
}

TEST_CASE("codimension and the degree-minus-codim bound") {
    Configuration cfg = example_a1a3();
    CHECK(codimension(cfg) == 2);
    CHECK(eisenbud_goto_bound(cfg) == 3);

    Configuration full23 = full_config(2, 3);
    CHECK(codimension(full23) == 3);
    CHECK(eisenbud_goto_bound(full23) == 2);

    Configuration c1 = validate_configuration(2, 2, {{1, 1}});
    CHECK(eisenbud_goto_bound(c1) == degree_of_ring(c1));
}

TEST_CASE("canonical ordering is descending lexicographic") {
    Configuration cfg = validate_configuration(
        3, 3, {{0, 1, 2}, {1, 1, 1}, {2, 0, 1}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}});
    CHECK(cfg.a_points == std::vector<LatticeVector>{
                              {2, 0, 1}, {1, 2, 0}, {1, 1, 1}, {1, 0, 2}, {0, 2, 1}, {0, 1, 2}});
}
