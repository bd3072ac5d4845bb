#include <doctest.h>

#include <random>

#include "toricgb/groebner.hpp"

using namespace toricgb;

namespace {

// universe x1 x2 y1 y2
Monomial m4(std::uint16_t x1, std::uint16_t x2, std::uint16_t y1, std::uint16_t y2) {
    return make_monomial({x1, x2, y1, y2});
}

Binomial bin(Monomial a, Monomial b, const TermOrder& ord) {
    auto r = oriented_binomial(std::move(a), std::move(b), ord);
    REQUIRE(r);
    return *r;
}

// generators of the plane example's toric ideal
std::vector<Binomial> a1a3_generators(const TermOrder& ord) {
    return {
        bin(m4(1, 1, 0, 0), m4(0, 0, 1, 1), ord),  // x1*x2 - y1*y2
        bin(m4(3, 0, 0, 0), m4(0, 1, 2, 0), ord),  // x1^3 - x2*y1^2
        bin(m4(0, 3, 0, 0), m4(1, 0, 0, 2), ord),  // x2^3 - x1*y2^2
        bin(m4(0, 2, 1, 0), m4(2, 0, 0, 1), ord),  // x2^2*y1 - x1^2*y2
    };
}

std::vector<Binomial> sorted_elements(const GroebnerBasis& g) {
    auto v = g.elements;
    std::sort(v.begin(), v.end(), [](const Binomial& a, const Binomial& b) {
        return a.lead.exps != b.lead.exps ? a.lead.exps < b.lead.exps : a.tail.exps < b.tail.exps;
    });
    return v;
}

bool every_s_binomial_reduces_to_zero(const GroebnerBasis& g) {
    for (std::size_t i = 0; i < g.elements.size(); ++i)
        for (std::size_t j = i + 1; j < g.elements.size(); ++j) {
            auto s = s_binomial(g.elements[i], g.elements[j], g.order);
            if (normal_form(std::move(s), g.elements, g.order)) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("s-binomial of pure differences") {
    TermOrder ord = grevlex_order();
    Binomial f = bin(m4(1, 1, 0, 0), m4(0, 0, 1, 1), ord);
    Binomial g = bin(m4(3, 0, 0, 0), m4(0, 1, 2, 0), ord);
    auto s = s_binomial(f, g, ord);
    REQUIRE(s);
    CHECK(s->lead == m4(0, 2, 2, 0));  // x2^2*y1^2
    CHECK(s->tail == m4(2, 0, 1, 1));  // x1^2*y1*y2

    CHECK_FALSE(s_binomial(f, f, ord));  // vanishes on equal inputs

    // coprime leads still produce an honest s-binomial when called directly
    Binomial h = bin(m4(0, 0, 2, 0), m4(0, 1, 0, 1), ord);
    auto sc = s_binomial(g, h, ord);
    REQUIRE(sc);
    CHECK(mono_lcm(g.lead, h.lead) == m4(3, 0, 2, 0));
}

TEST_CASE("normal form") {
    TermOrder ord = grevlex_order();
    auto basis = a1a3_generators(ord);

    SUBCASE("the motivating s-binomial reduces to zero") {
        auto s = oriented_binomial(m4(0, 2, 2, 0), m4(2, 0, 1, 1), ord);
        CHECK_FALSE(normal_form(std::move(s), basis, ord));
    }
    SUBCASE("irreducible binomials pass through") {
        auto b = oriented_binomial(m4(0, 0, 3, 0), m4(0, 0, 0, 3), ord);
        auto nf = normal_form(b, basis, ord);
        REQUIRE(nf);
        CHECK(*nf == *b);
    }
    SUBCASE("multiples of a generator vanish") {
        auto b = oriented_binomial(m4(1, 1, 1, 0), m4(0, 0, 2, 1), ord);  // y1 * (x1*x2 - y1*y2)
        CHECK_FALSE(normal_form(std::move(b), basis, ord));
    }
    SUBCASE("zero input stays zero") { CHECK_FALSE(normal_form(std::nullopt, basis, ord)); }
}

TEST_CASE("buchberger reproduces the plane example bases") {
    SUBCASE("grevlex: the four generators are already the reduced basis") {
        TermOrder ord = grevlex_order();
        GroebnerBasis gb = reduce_basis(buchberger(a1a3_generators(ord), ord));
        CHECK(gb.reduced);
        CHECK(sorted_elements(gb) == sorted_elements(GroebnerBasis{ord, a1a3_generators(ord), false}));
    }
    SUBCASE("lex: a fifth element appears") {
        TermOrder ord = lex_order();
        GroebnerBasis gb = reduce_basis(buchberger(a1a3_generators(ord), ord));
        std::vector<Binomial> expected = a1a3_generators(ord);  // reoriented for lex
        expected.push_back(bin(m4(0, 4, 0, 0), m4(0, 0, 1, 3), ord));  // x2^4 - y1*y2^3
        CHECK(sorted_elements(gb) == sorted_elements(GroebnerBasis{ord, expected, false}));
        CHECK(every_s_binomial_reduces_to_zero(gb));
    }
}

TEST_CASE("buchberger is idempotent on a reduced basis") {
    TermOrder ord = grevlex_order();
    GroebnerBasis gb = reduce_basis(buchberger(a1a3_generators(ord), ord));
    GroebnerBasis again = reduce_basis(buchberger(gb.elements, ord));
    CHECK(sorted_elements(gb) == sorted_elements(again));
}

TEST_CASE("buchberger on a single generator") {
    TermOrder ord = grevlex_order();
    std::vector<Binomial> one = {bin(m4(2, 0, 0, 0), m4(0, 1, 0, 1), ord)};
    GroebnerBasis gb = reduce_basis(buchberger(one, ord));
    CHECK(gb.elements == one);
}

TEST_CASE("pair strategies agree on the reduced basis") {
    for (TermOrder ord : {grevlex_order(), lex_order()}) {
        auto normal = reduce_basis(buchberger(a1a3_generators(ord), ord, std::nullopt, PairStrategy::Normal));
        auto fifo = reduce_basis(buchberger(a1a3_generators(ord), ord, std::nullopt, PairStrategy::Fifo));
        CHECK(sorted_elements(normal) == sorted_elements(fifo));
    }
}

TEST_CASE("initial ideal") {
    TermOrder ord = grevlex_order();
    GroebnerBasis gb = reduce_basis(buchberger(a1a3_generators(ord), ord));
    auto leads = initial_ideal(gb);
    std::vector<std::vector<std::uint16_t>> got;
    for (const auto& m : leads) got.push_back(m.exps);
    std::sort(got.begin(), got.end());
    std::vector<std::vector<std::uint16_t>> expected = {
        {1, 1, 0, 0}, {3, 0, 0, 0}, {0, 3, 0, 0}, {0, 2, 1, 0}};
    std::sort(expected.begin(), expected.end());
    CHECK(got == expected);

    GroebnerBasis empty{ord, {}, true};
    CHECK(initial_ideal(empty).empty());
    GroebnerBasis not_reduced{ord, {}, false};
    CHECK_THROWS_AS(initial_ideal(not_reduced), InputError);
}

TEST_CASE("truncation rejects non-homogeneous weights") {
    TermOrder ord = grevlex_order();
    Truncation t;
    t.weights = {1, 1, 1, 1};
    t.cap = 10;
    // x1*x2 - y1 is not weight-homogeneous for all-ones weights
    std::vector<Binomial> gens = {bin(m4(1, 1, 0, 0), m4(0, 0, 1, 0), ord)};
    CHECK_THROWS_AS(buchberger(gens, ord, t), InputError);
}

TEST_CASE("truncated run keeps the basis when the cap clears every element") {
    TermOrder ord = grevlex_order();
    Truncation t;
    t.weights = {1, 1, 1, 1};
    t.cap = 100;
    auto full = reduce_basis(buchberger(a1a3_generators(ord), ord));
    auto capped = reduce_basis(buchberger(a1a3_generators(ord), ord, t));
    CHECK(sorted_elements(full) == sorted_elements(capped));
}

TEST_CASE("random binomial ideals: strategies agree and s-pairs vanish") {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<int> nvars_dist(3, 5), ngens_dist(2, 4), exp_dist(0, 3);
    int done = 0;
    while (done < 30) {
        std::size_t nvars = static_cast<std::size_t>(nvars_dist(rng));
        TermOrder ord = rng() % 2 ? grevlex_order() : lex_order();
        std::vector<Binomial> gens;
        int ngens = ngens_dist(rng);
        for (int i = 0; i < ngens; ++i) {
            std::vector<std::uint16_t> a(nvars), b(nvars);
            for (auto& x : a) x = static_cast<std::uint16_t>(exp_dist(rng));
            for (auto& x : b) x = static_cast<std::uint16_t>(exp_dist(rng));
            if (auto bi = oriented_binomial(make_monomial(a), make_monomial(b), ord))
                gens.push_back(std::move(*bi));
        }
        if (gens.empty()) continue;
        ++done;

        auto normal = reduce_basis(buchberger(gens, ord, std::nullopt, PairStrategy::Normal));
        auto fifo = reduce_basis(buchberger(gens, ord, std::nullopt, PairStrategy::Fifo));
        CHECK(sorted_elements(normal) == sorted_elements(fifo));
        CHECK(every_s_binomial_reduces_to_zero(normal));
        for (const auto& g : gens) CHECK_FALSE(normal_form(g, normal.elements, ord));
    }
}

TEST_CASE("reduce_basis drops redundant elements and reduces tails") {
    TermOrder ord = grevlex_order();
    auto gens = a1a3_generators(ord);
    // adjoin a multiple of the first generator; reduction must remove it
    gens.push_back(bin(m4(2, 1, 0, 0), m4(1, 0, 1, 1), ord));  // x1 * (x1*x2 - y1*y2)
    GroebnerBasis gb = reduce_basis(buchberger(gens, ord));
    CHECK(sorted_elements(gb) == sorted_elements(GroebnerBasis{ord, a1a3_generators(ord), false}));
    // reduced: no term divisible by another lead
    for (std::size_t i = 0; i < gb.elements.size(); ++i)
        for (std::size_t j = 0; j < gb.elements.size(); ++j) {
            if (i == j) continue;
            CHECK_FALSE(mono_divides(gb.elements[j].lead, gb.elements[i].lead));
            CHECK_FALSE(mono_divides(gb.elements[j].lead, gb.elements[i].tail));
        }
}
