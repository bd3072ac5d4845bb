#include "toricgb/monomial.hpp"

#include <algorithm>

namespace toricgb {

VariableUniverse xy_universe(std::int64_t c, std::int64_t d) {
    VariableUniverse u;
    for (std::int64_t i = 1; i <= c; ++i) u.names.push_back("x" + std::to_string(i));
    for (std::int64_t j = 1; j <= d; ++j) u.names.push_back("y" + std::to_string(j));
    return u;
}

VariableUniverse txy_universe(std::int64_t c, std::int64_t d) {
    VariableUniverse u;
    for (std::int64_t j = 1; j <= d; ++j) u.names.push_back("t" + std::to_string(j));
    for (std::int64_t i = 1; i <= c; ++i) u.names.push_back("x" + std::to_string(i));
    for (std::int64_t j = 1; j <= d; ++j) u.names.push_back("y" + std::to_string(j));
    return u;
}

Monomial make_monomial(std::vector<std::uint16_t> exps) {
    Monomial m;
    m.exps = std::move(exps);
    std::uint32_t deg = 0;
    for (auto e : m.exps) deg += e;
    m.degree = deg;
    return m;
}

Monomial mono_one(std::size_t nvars) { return make_monomial(std::vector<std::uint16_t>(nvars, 0)); }

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.exps.resize(a.exps.size());
    for (std::size_t i = 0; i < a.exps.size(); ++i) {
        std::uint32_t s = static_cast<std::uint32_t>(a.exps[i]) + b.exps[i];
        if (s > 0xffffu) throw InvariantError("monomial exponent overflow");
        r.exps[i] = static_cast<std::uint16_t>(s);
    }
    r.degree = a.degree + b.degree;
    return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.exps.resize(a.exps.size());
    for (std::size_t i = 0; i < a.exps.size(); ++i) r.exps[i] = static_cast<std::uint16_t>(a.exps[i] - b.exps[i]);
    r.degree = a.degree - b.degree;
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.exps.resize(a.exps.size());
    std::uint32_t deg = 0;
    for (std::size_t i = 0; i < a.exps.size(); ++i) {
        r.exps[i] = std::max(a.exps[i], b.exps[i]);
        deg += r.exps[i];
    }
    r.degree = deg;
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    if (a.degree > b.degree) return false;
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] > b.exps[i]) return false;
    return true;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] && b.exps[i]) return false;
    return true;
}

std::uint64_t support_mask(const Monomial& m) {
    std::uint64_t mask = 0;
    std::size_t n = std::min<std::size_t>(m.exps.size(), 64);
    for (std::size_t i = 0; i < n; ++i)
        if (m.exps[i]) mask |= std::uint64_t{1} << i;
    return mask;
}

std::int64_t weighted_degree(const Monomial& m, std::span<const std::int64_t> weights) {
    std::int64_t w = 0;
    for (std::size_t i = 0; i < m.exps.size(); ++i) w += static_cast<std::int64_t>(m.exps[i]) * weights[i];
    return w;
}

std::string mono_to_string(const Monomial& m, const VariableUniverse& u) {
    if (m.is_one()) return "1";
    std::string s;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
        if (!m.exps[i]) continue;
        if (!s.empty()) s += "*";
        s += u.names[i];
        if (m.exps[i] > 1) s += "^" + std::to_string(m.exps[i]);
    }
    return s;
}

TermOrder grevlex_order() { return TermOrder{OrderKind::Grevlex, 0, OrderKind::Grevlex}; }
TermOrder lex_order() { return TermOrder{OrderKind::Lex, 0, OrderKind::Grevlex}; }
TermOrder elimination_order(std::size_t block_split, OrderKind inner) {
    return TermOrder{OrderKind::Block, block_split, inner};
}

namespace {

int grevlex_range(const Monomial& u, const Monomial& v, std::size_t lo, std::size_t hi) {
    std::uint32_t du = 0, dv = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        du += u.exps[i];
        dv += v.exps[i];
    }
    if (du != dv) return du < dv ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
        if (u.exps[i] != v.exps[i]) return u.exps[i] > v.exps[i] ? -1 : 1;
    }
    return 0;
}

int lex_range(const Monomial& u, const Monomial& v, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
        if (u.exps[i] != v.exps[i]) return u.exps[i] > v.exps[i] ? 1 : -1;
    }
    return 0;
}

int compare_range(OrderKind kind, const Monomial& u, const Monomial& v, std::size_t lo, std::size_t hi) {
    return kind == OrderKind::Grevlex ? grevlex_range(u, v, lo, hi) : lex_range(u, v, lo, hi);
}

}  // namespace

int compare(const TermOrder& order, const Monomial& u, const Monomial& v) {
    if (u.exps.size() != v.exps.size()) throw InputError("compare: monomials from different universes");
    std::size_t n = u.exps.size();
    if (order.kind != OrderKind::Block) return compare_range(order.kind, u, v, 0, n);
    int head = grevlex_range(u, v, 0, order.block_split);
    if (head != 0) return head;
    return compare_range(order.inner, u, v, order.block_split, n);
}

}  // namespace toricgb
