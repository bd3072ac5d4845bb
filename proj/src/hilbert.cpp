#include "toricgb/hilbert.hpp"

#include <algorithm>

#include "toricgb/checked.hpp"

namespace toricgb {

namespace {

using Poly = std::vector<std::int64_t>;  // coefficient of t^k at index k

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = checked_add(r[i], b[i]);
    trim(r);
    return r;
}

Poly poly_shift(const Poly& a, std::size_t k) {
    if (a.empty()) return {};
    Poly r(a.size() + k, 0);
    std::copy(a.begin(), a.end(), r.begin() + static_cast<std::ptrdiff_t>(k));
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = checked_add(r[i + j], checked_mul(a[i], b[j]));
    trim(r);
    return r;
}

void minimalize(std::vector<Monomial>& gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return a.degree < b.degree; });
    std::vector<Monomial> out;
    for (auto& g : gens) {
        bool redundant = false;
        for (const auto& k : out)
            if (mono_divides(k, g)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(std::move(g));
    }
    gens = std::move(out);
}

bool pairwise_coprime(const std::vector<Monomial>& gens) {
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!mono_coprime(gens[i], gens[j])) return false;
    return true;
}

Poly numerator_rec(std::vector<Monomial> gens) {
    minimalize(gens);
    if (gens.empty()) return {1};
    if (gens.front().degree == 0) throw InputError("hilbert: ideal contains a unit");

    if (pairwise_coprime(gens)) {
        Poly r{1};
        for (const auto& g : gens) {
            Poly factor(g.degree + 1, 0);
            factor[0] = 1;
            factor[g.degree] = -1;
            r = poly_mul(r, factor);
        }
        return r;
    }

    // pivot: the variable dividing the most generators
    std::size_t nvars = gens.front().exps.size();
    std::vector<int> occ(nvars, 0);
    for (const auto& g : gens)
        for (std::size_t v = 0; v < nvars; ++v)
            if (g.exps[v]) ++occ[v];
    std::size_t pivot = static_cast<std::size_t>(std::max_element(occ.begin(), occ.end()) - occ.begin());

    // sum branch: I + (x_pivot)
    std::vector<Monomial> sum_gens;
    for (const auto& g : gens)
        if (!g.exps[pivot]) sum_gens.push_back(g);
    std::vector<std::uint16_t> e(nvars, 0);
    e[pivot] = 1;
    sum_gens.push_back(make_monomial(std::move(e)));

    // colon branch: I : x_pivot
    std::vector<Monomial> colon_gens;
    colon_gens.reserve(gens.size());
    for (auto& g : gens) {
        if (g.exps[pivot]) {
            --g.exps[pivot];
            --g.degree;
        }
        colon_gens.push_back(std::move(g));
    }

    return poly_add(numerator_rec(std::move(sum_gens)), poly_shift(numerator_rec(std::move(colon_gens)), 1));
}

std::int64_t eval_at_one(const Poly& p) {
    std::int64_t s = 0;
    for (auto c : p) s = checked_add(s, c);
    return s;
}

// pre: p(1) == 0; returns p / (1 - t)
Poly divide_one_minus_t(const Poly& p) {
    Poly q(p.size() - 1, 0);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        acc = checked_add(acc, p[i]);
        q[i] = acc;
    }
    trim(q);
    return q;
}

}  // namespace

std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars) {
    for (const auto& g : gens)
        if (g.exps.size() != nvars) throw InputError("hilbert: generator arity mismatch");
    return numerator_rec(std::move(gens));
}

HilbertData hilbert_data(std::vector<Monomial> gens, std::size_t nvars) {
    Poly num = hilbert_numerator(std::move(gens), nvars);
    if (num.empty()) throw InvariantError("hilbert: zero quotient ring");
    std::size_t strips = 0;
    while (eval_at_one(num) == 0) {
        num = divide_one_minus_t(num);
        if (num.empty()) throw InvariantError("hilbert: numerator vanished entirely");
        ++strips;
    }
    HilbertData h;
    h.dimension = static_cast<std::int64_t>(nvars) - static_cast<std::int64_t>(strips);
    h.multiplicity = eval_at_one(num);
    return h;
}

}  // namespace toricgb
