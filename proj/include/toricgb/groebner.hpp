#ifndef TORICGB_GROEBNER_HPP
#define TORICGB_GROEBNER_HPP

#include <optional>
#include <vector>

#include "toricgb/monomial.hpp"

namespace toricgb {

// Pure difference lead - tail with implicit coefficients +1, -1.
// lead > tail under the active order, always; zero is represented as an
// empty optional wherever it can arise.
struct Binomial {
    Monomial lead, tail;
    bool operator==(const Binomial& o) const { return lead == o.lead && tail == o.tail; }
};

// Orient a - b under `order`; nullopt when the terms coincide.
std::optional<Binomial> oriented_binomial(Monomial a, Monomial b, const TermOrder& order);

// (lcm/lead(g))*tail(g) - (lcm/lead(f))*tail(f), normalized. The S-polynomial
// of two pure differences is again a pure difference, or zero.
std::optional<Binomial> s_binomial(const Binomial& f, const Binomial& g, const TermOrder& order);

// Full normal form: no term of the result is divisible by any lead of G.
// Deterministic: the currently greater term is reduced first, and among
// divisors the G-element of smallest index wins.
std::optional<Binomial> normal_form(std::optional<Binomial> b, const std::vector<Binomial>& basis,
                                    const TermOrder& order);

struct GroebnerBasis {
    TermOrder order;
    std::vector<Binomial> elements;
    bool reduced = false;
};

enum class PairStrategy { Normal, Fifo };

// Weighted-degree truncation for weight-homogeneous input: pairs whose lcm
// weighs more than `cap` are discarded, yielding a cap-truncated basis.
struct Truncation {
    std::vector<std::int64_t> weights;
    std::int64_t cap = 0;
};

// Buchberger with the coprime-lead and chain criteria (Gebauer-Moeller
// update). Pair selection: Normal = smallest lcm degree first, Fifo =
// creation order. Throws InputError when truncation is requested on input
// that is not homogeneous for the given weights.
GroebnerBasis buchberger(const std::vector<Binomial>& gens, const TermOrder& order,
                         const std::optional<Truncation>& truncation = std::nullopt,
                         PairStrategy strategy = PairStrategy::Normal);

// Unique reduced basis for (ideal, order): minimal leads, reduced tails,
// elements sorted ascending by lead.
GroebnerBasis reduce_basis(const GroebnerBasis& g);

// Leads of a reduced basis = minimal generators of the initial ideal.
std::vector<Monomial> initial_ideal(const GroebnerBasis& g);

}  // namespace toricgb

#endif
