#include "toricgb/groebner.hpp"

#include <algorithm>
#include <set>

namespace toricgb {

std::optional<Binomial> oriented_binomial(Monomial a, Monomial b, const TermOrder& order) {
    int c = compare(order, a, b);
    if (c == 0) return std::nullopt;
    Binomial r;
    if (c > 0) {
        r.lead = std::move(a);
        r.tail = std::move(b);
    } else {
        r.lead = std::move(b);
        r.tail = std::move(a);
    }
    return r;
}

std::optional<Binomial> s_binomial(const Binomial& f, const Binomial& g, const TermOrder& order) {
    Monomial l = mono_lcm(f.lead, g.lead);
    Monomial a = mono_mul(mono_div(l, g.lead), g.tail);
    Monomial b = mono_mul(mono_div(l, f.lead), f.tail);
    return oriented_binomial(std::move(a), std::move(b), order);
}

namespace {

// divisibility lookup with support-mask and degree prefilters
struct LeadIndex {
    const std::vector<Binomial>* basis = nullptr;
    std::vector<std::uint64_t> masks;
    std::vector<std::uint32_t> degs;

    void rebuild(const std::vector<Binomial>& b) {
        basis = &b;
        masks.clear();
        degs.clear();
        for (const auto& e : b) push(e);
    }
    void push(const Binomial& e) {
        masks.push_back(support_mask(e.lead));
        degs.push_back(e.lead.degree);
    }
    // smallest index whose lead divides m, or -1
    int find(const Monomial& m, std::uint64_t mmask) const {
        for (std::size_t i = 0; i < masks.size(); ++i) {
            if (degs[i] > m.degree) continue;
            if (masks[i] & ~mmask) continue;
            if (mono_divides((*basis)[i].lead, m)) return static_cast<int>(i);
        }
        return -1;
    }
};

// reduce a single term to its normal form; a monomial never vanishes
Monomial reduce_monomial(Monomial m, const LeadIndex& idx) {
    for (;;) {
        int i = idx.find(m, support_mask(m));
        if (i < 0) return m;
        const Binomial& g = (*idx.basis)[static_cast<std::size_t>(i)];
        m = mono_mul(mono_div(m, g.lead), g.tail);
    }
}

std::optional<Binomial> normal_form_indexed(std::optional<Binomial> b, const LeadIndex& idx,
                                            const TermOrder& order) {
    while (b) {
        int i = idx.find(b->lead, support_mask(b->lead));
        if (i >= 0) {
            const Binomial& g = (*idx.basis)[static_cast<std::size_t>(i)];
            Monomial repl = mono_mul(mono_div(b->lead, g.lead), g.tail);
            b = oriented_binomial(std::move(repl), std::move(b->tail), order);
            continue;
        }
        int j = idx.find(b->tail, support_mask(b->tail));
        if (j >= 0) {
            const Binomial& g = (*idx.basis)[static_cast<std::size_t>(j)];
            // replacing the lesser term keeps the orientation
            b->tail = mono_mul(mono_div(b->tail, g.lead), g.tail);
            continue;
        }
        break;
    }
    return b;
}

}  // namespace

std::optional<Binomial> normal_form(std::optional<Binomial> b, const std::vector<Binomial>& basis,
                                    const TermOrder& order) {
    LeadIndex idx;
    idx.rebuild(basis);
    return normal_form_indexed(std::move(b), idx, order);
}

namespace {

struct Pair {
    Monomial lcm;
    std::int64_t sel_deg = 0;  // std degree, or weighted degree when truncating
    std::uint32_t i = 0, j = 0;
    std::uint64_t seq = 0;
};

struct PairLess {
    PairStrategy strategy;
    bool operator()(const Pair& a, const Pair& b) const {
        if (strategy == PairStrategy::Fifo) return a.seq < b.seq;
        if (a.sel_deg != b.sel_deg) return a.sel_deg < b.sel_deg;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    }
};

struct BuchbergerState {
    const TermOrder& order;
    const std::optional<Truncation>& trunc;
    std::vector<Binomial> basis;
    LeadIndex idx;
    std::set<Pair, PairLess> queue;
    std::uint64_t next_seq = 0;

    BuchbergerState(const TermOrder& o, const std::optional<Truncation>& t, PairStrategy s)
        : order(o), trunc(t), queue(PairLess{s}) {}

    std::int64_t selection_degree(const Monomial& lcm) const {
        if (trunc) return weighted_degree(lcm, trunc->weights);
        return lcm.degree;
    }

    // Gebauer-Moeller update for a new basis element at index s.
    void add_element(Binomial h) {
        const std::uint32_t s = static_cast<std::uint32_t>(basis.size());
        const Monomial& lh = h.lead;

        // chain criterion against queued pairs
        for (auto it = queue.begin(); it != queue.end();) {
            const Monomial& l = it->lcm;
            if (mono_divides(lh, l) && !(mono_lcm(basis[it->i].lead, lh) == l) &&
                !(mono_lcm(basis[it->j].lead, lh) == l)) {
                it = queue.erase(it);
            } else {
                ++it;
            }
        }

        // candidate pairs (i, s)
        struct Cand {
            Monomial lcm;
            std::uint32_t i;
            bool coprime;
            bool dead = false;
        };
        std::vector<Cand> cands;
        cands.reserve(basis.size());
        for (std::uint32_t i = 0; i < s; ++i)
            cands.push_back({mono_lcm(basis[i].lead, lh), i, mono_coprime(basis[i].lead, lh)});

        // drop candidates whose lcm is a proper multiple of another's
        for (auto& a : cands) {
            if (a.dead) continue;
            for (const auto& b : cands) {
                if (&a == &b || b.dead) continue;
                if (mono_divides(b.lcm, a.lcm) && !(b.lcm == a.lcm)) {
                    a.dead = true;
                    break;
                }
            }
        }
        // among candidates sharing an lcm keep one, none if any is coprime
        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (cands[a].dead) continue;
            bool any_coprime = cands[a].coprime;
            for (std::size_t b = a + 1; b < cands.size(); ++b) {
                if (cands[b].dead || !(cands[b].lcm == cands[a].lcm)) continue;
                any_coprime = any_coprime || cands[b].coprime;
                cands[b].dead = true;
            }
            if (any_coprime) cands[a].dead = true;
        }

        for (auto& cd : cands) {
            if (cd.dead) continue;
            Pair p;
            p.sel_deg = selection_degree(cd.lcm);
            if (trunc && p.sel_deg > trunc->cap) continue;
            p.lcm = std::move(cd.lcm);
            p.i = cd.i;
            p.j = s;
            p.seq = next_seq++;
            queue.insert(std::move(p));
        }

        idx.push(h);
        basis.push_back(std::move(h));
    }
};

}  // namespace

GroebnerBasis buchberger(const std::vector<Binomial>& gens, const TermOrder& order,
                         const std::optional<Truncation>& truncation, PairStrategy strategy) {
    if (truncation) {
        for (const auto& g : gens) {
            if (weighted_degree(g.lead, truncation->weights) != weighted_degree(g.tail, truncation->weights))
                throw InputError("buchberger: truncation requested on non-weight-homogeneous input");
        }
    }

    BuchbergerState st(order, truncation, strategy);
    st.idx.rebuild(st.basis);
    for (const auto& g : gens) {
        auto nf = normal_form_indexed(g, st.idx, order);
        if (nf) st.add_element(std::move(*nf));
    }

    while (!st.queue.empty()) {
        Pair p = *st.queue.begin();
        st.queue.erase(st.queue.begin());
        auto s = s_binomial(st.basis[p.i], st.basis[p.j], order);
        auto nf = normal_form_indexed(std::move(s), st.idx, order);
        if (nf) st.add_element(std::move(*nf));
    }

    GroebnerBasis out;
    out.order = order;
    out.elements = std::move(st.basis);
    out.reduced = false;
    return out;
}

namespace {

struct LeadLess {
    const TermOrder& order;
    bool operator()(const Binomial& a, const Binomial& b) const { return compare(order, a.lead, b.lead) < 0; }
};

}  // namespace

GroebnerBasis reduce_basis(const GroebnerBasis& g) {
    GroebnerBasis out;
    out.order = g.order;

    std::vector<Binomial> sorted = g.elements;
    std::stable_sort(sorted.begin(), sorted.end(), LeadLess{g.order});

    // minimal leads: ascending scan, keep only leads no kept lead divides
    std::vector<Binomial> kept;
    LeadIndex kept_idx;
    kept_idx.rebuild(kept);
    for (auto& e : sorted) {
        if (kept_idx.find(e.lead, support_mask(e.lead)) >= 0) continue;
        kept.push_back(std::move(e));
        kept_idx.push(kept.back());
    }

    // autoreduce tails against the minimal lead set
    for (auto& e : kept) {
        e.tail = reduce_monomial(std::move(e.tail), kept_idx);
        if (e.tail == e.lead)
            throw InvariantError("reduce_basis: tail reduced onto its own lead (input was not a basis)");
    }

    out.elements = std::move(kept);
    out.reduced = true;
    return out;
}

std::vector<Monomial> initial_ideal(const GroebnerBasis& g) {
    if (!g.reduced) throw InputError("initial_ideal: basis must be reduced");
    std::vector<Monomial> leads;
    leads.reserve(g.elements.size());
    for (const auto& e : g.elements) leads.push_back(e.lead);
    return leads;
}

}  // namespace toricgb
