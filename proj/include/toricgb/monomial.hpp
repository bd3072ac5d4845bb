#ifndef TORICGB_MONOMIAL_HPP
#define TORICGB_MONOMIAL_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "toricgb/errors.hpp"

namespace toricgb {

// Ordered variable names; significance decreases left to right.
// x_1 > ... > x_c > y_1 > ... > y_d, with t_1 > ... > t_d prepended for the
// elimination ring.
struct VariableUniverse {
    std::vector<std::string> names;
    std::size_t size() const { return names.size(); }
};

VariableUniverse xy_universe(std::int64_t c, std::int64_t d);
VariableUniverse txy_universe(std::int64_t c, std::int64_t d);

// Dense exponent vector with cached total degree. Exponents stay small at
// desk scale; addition is checked against the 16-bit width.
struct Monomial {
    std::vector<std::uint16_t> exps;
    std::uint32_t degree = 0;

    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool is_one() const { return degree == 0; }
};

Monomial make_monomial(std::vector<std::uint16_t> exps);
Monomial mono_one(std::size_t nvars);
Monomial mono_mul(const Monomial& a, const Monomial& b);
// pre: divides(b, a)
Monomial mono_div(const Monomial& a, const Monomial& b);
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
bool mono_coprime(const Monomial& a, const Monomial& b);
// support of the first 64 variables; used as a cheap divisibility prefilter
std::uint64_t support_mask(const Monomial& m);
std::int64_t weighted_degree(const Monomial& m, std::span<const std::int64_t> weights);
std::string mono_to_string(const Monomial& m, const VariableUniverse& u);

// grevlex: total degree first, then the last nonzero entry of the exponent
//   difference decides (negative entry => greater).
// lex: first nonzero entry of the difference decides (positive => greater).
// block: grevlex on the leading block of block_split variables, ties broken
//   by `inner` on the rest; the restriction to the trailing block is then
//   exactly `inner`.
enum class OrderKind { Grevlex, Lex, Block };

struct TermOrder {
    OrderKind kind = OrderKind::Grevlex;
    std::size_t block_split = 0;
    OrderKind inner = OrderKind::Grevlex;
};

TermOrder grevlex_order();
TermOrder lex_order();
TermOrder elimination_order(std::size_t block_split, OrderKind inner);

// -1 (u < v), 0, +1 (u > v); throws InputError on universe size mismatch
int compare(const TermOrder& order, const Monomial& u, const Monomial& v);

}  // namespace toricgb

#endif
