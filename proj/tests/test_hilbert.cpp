#include <doctest.h>

#include <random>

#include "toricgb/hilbert.hpp"
#include "toricgb/lattice.hpp"

using namespace toricgb;

namespace {

// count degree-n standard monomials directly
std::int64_t count_standard_monomials(const std::vector<Monomial>& gens, std::size_t nvars, std::int64_t n) {
    std::vector<std::uint16_t> e(nvars, 0);
    std::int64_t count = 0;
    auto rec = [&](auto&& self, std::size_t pos, std::int64_t left) -> void {
        if (pos + 1 == nvars) {
            e[pos] = static_cast<std::uint16_t>(left);
            Monomial m = make_monomial(e);
            bool standard = true;
            for (const auto& g : gens)
                if (mono_divides(g, m)) {
                    standard = false;
                    break;
                }
            if (standard) ++count;
            return;
        }
        for (std::int64_t v = 0; v <= left; ++v) {
            e[pos] = static_cast<std::uint16_t>(v);
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, n);
    return count;
}

// Hilbert function from the numerator: HF(n) = sum_j N_j * C(n-j+v-1, v-1)
std::int64_t hf_from_numerator(const std::vector<std::int64_t>& num, std::size_t nvars, std::int64_t n) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < num.size(); ++j) {
        std::int64_t k = n - static_cast<std::int64_t>(j);
        if (k < 0) continue;
        s += num[j] * binomial_coefficient(k + static_cast<std::int64_t>(nvars) - 1,
                                           static_cast<std::int64_t>(nvars) - 1);
    }
    return s;
}

Monomial from_exps(std::vector<std::uint16_t> e) { return make_monomial(std::move(e)); }

}  // namespace

TEST_CASE("hilbert data on the plane example initial ideal") {
    // x1*x2, x1^3, x2^3, x2^2*y1 in 4 variables
    std::vector<Monomial> gens = {from_exps({1, 1, 0, 0}), from_exps({3, 0, 0, 0}),
                                  from_exps({0, 3, 0, 0}), from_exps({0, 2, 1, 0})};
    HilbertData h = hilbert_data(gens, 4);
    CHECK(h.dimension == 2);
    CHECK(h.multiplicity == 4);

    auto num = hilbert_numerator(gens, 4);
    for (std::int64_t n = 0; n <= 10; ++n)
        CHECK(hf_from_numerator(num, 4, n) == count_standard_monomials(gens, 4, n));
}

TEST_CASE("hilbert data on the space example initial ideal") {
    // the 20 minimal generators in 9 variables x1..x6 y1..y3
    auto quad = [](int a, int b) {
        std::vector<std::uint16_t> e(9, 0);
        e[static_cast<std::size_t>(a)] += 1;
        e[static_cast<std::size_t>(b)] += 1;
        return make_monomial(std::move(e));
    };
    std::vector<Monomial> gens = {quad(0, 1), quad(1, 2), quad(1, 4), quad(0, 0), quad(0, 2),
                                  quad(2, 2), quad(1, 3), quad(1, 5), quad(2, 4), quad(4, 4),
                                  quad(0, 3), quad(2, 3), quad(3, 4), quad(3, 3), quad(2, 5),
                                  quad(4, 5), quad(3, 5), quad(5, 5)};
    gens.push_back(from_exps({0, 3, 0, 0, 0, 0, 0, 0, 0}));  // x2^3
    gens.push_back(from_exps({1, 0, 0, 0, 0, 1, 0, 1, 0}));  // x1*x6*y2
    HilbertData h = hilbert_data(gens, 9);
    CHECK(h.dimension == 3);
    CHECK(h.multiplicity == 9);

    auto num = hilbert_numerator(gens, 9);
    for (std::int64_t n = 0; n <= 10; ++n)
        CHECK(hf_from_numerator(num, 9, n) == count_standard_monomials(gens, 9, n));
}

TEST_CASE("empty ideal") {
    HilbertData h = hilbert_data({}, 7);
    CHECK(h.dimension == 7);
    CHECK(h.multiplicity == 1);
}

TEST_CASE("pure powers form a complete intersection") {
    std::vector<Monomial> gens = {from_exps({2, 0, 0}), from_exps({0, 3, 0})};
    HilbertData h = hilbert_data(gens, 3);
    CHECK(h.dimension == 1);
    CHECK(h.multiplicity == 6);
}

TEST_CASE("unit ideal is rejected") {
    CHECK_THROWS_AS(hilbert_data({mono_one(3)}, 3), InputError);
}

TEST_CASE("series expansion matches direct counting on random monomial ideals") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> nv(2, 5), ng(1, 8), ex(0, 3);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t nvars = static_cast<std::size_t>(nv(rng));
        std::vector<Monomial> gens;
        int count = ng(rng);
        for (int i = 0; i < count; ++i) {
            std::vector<std::uint16_t> e(nvars, 0);
            bool nonzero = false;
            for (auto& x : e) {
                x = static_cast<std::uint16_t>(ex(rng));
                nonzero = nonzero || x;
            }
            if (nonzero) gens.push_back(make_monomial(std::move(e)));
        }
        auto num = hilbert_numerator(gens, nvars);
        for (std::int64_t n = 0; n <= 8; ++n)
            CHECK(hf_from_numerator(num, nvars, n) == count_standard_monomials(gens, nvars, n));
    }
}

TEST_CASE("redundant generators do not change the answer") {
    std::vector<Monomial> minimal = {from_exps({1, 1, 0}), from_exps({0, 0, 2})};
    std::vector<Monomial> padded = minimal;
    padded.push_back(from_exps({2, 1, 0}));
    padded.push_back(from_exps({1, 1, 2}));
    CHECK(hilbert_numerator(minimal, 3) == hilbert_numerator(padded, 3));
}
