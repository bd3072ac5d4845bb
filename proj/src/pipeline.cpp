#include "toricgb/pipeline.hpp"

#include <algorithm>

#include "toricgb/checked.hpp"
#include "toricgb/hilbert.hpp"

namespace toricgb {

std::vector<Binomial> build_elimination_system(const Configuration& cfg) {
    const std::size_t d = static_cast<std::size_t>(cfg.d);
    const std::size_t c = static_cast<std::size_t>(cfg.c);
    const std::size_t n = d + c + d;
    std::vector<Binomial> gens;
    gens.reserve(c + d);
    for (std::size_t i = 0; i < c; ++i) {
        std::vector<std::uint16_t> t_part(n, 0), x_part(n, 0);
        for (std::size_t j = 0; j < d; ++j) t_part[j] = static_cast<std::uint16_t>(cfg.a_points[i][j]);
        x_part[d + i] = 1;
        gens.push_back(Binomial{make_monomial(std::move(t_part)), make_monomial(std::move(x_part))});
    }
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<std::uint16_t> t_part(n, 0), y_part(n, 0);
        t_part[j] = static_cast<std::uint16_t>(cfg.alpha);
        y_part[d + c + j] = 1;
        gens.push_back(Binomial{make_monomial(std::move(t_part)), make_monomial(std::move(y_part))});
    }
    return gens;
}

namespace {

// drop the t-block from a t,x,y monomial
Monomial strip_t(const Monomial& m, std::size_t d) {
    std::vector<std::uint16_t> e(m.exps.begin() + static_cast<std::ptrdiff_t>(d), m.exps.end());
    return make_monomial(std::move(e));
}

bool t_free(const Monomial& m, std::size_t d) {
    for (std::size_t j = 0; j < d; ++j)
        if (m.exps[j]) return false;
    return true;
}

GroebnerBasis extract_xy_basis(const GroebnerBasis& ja_reduced, std::size_t d, OrderKind xy_order) {
    TermOrder xy = xy_order == OrderKind::Grevlex ? grevlex_order() : lex_order();
    GroebnerBasis out;
    out.order = xy;
    for (const auto& e : ja_reduced.elements) {
        if (!t_free(e.lead, d)) continue;
        // the tail is below the lead in the elimination order, so it is t-free too
        out.elements.push_back(Binomial{strip_t(e.lead, d), strip_t(e.tail, d)});
    }
    return reduce_basis(out);
}

GroebnerBasis eliminate(const Configuration& cfg, OrderKind inner,
                        const std::optional<Truncation>& trunc = std::nullopt) {
    auto gens = build_elimination_system(cfg);
    TermOrder ord = elimination_order(static_cast<std::size_t>(cfg.d), inner);
    return reduce_basis(buchberger(gens, ord, trunc));
}

}  // namespace

GroebnerBasis toric_groebner(const Configuration& cfg, OrderKind xy_order) {
    if (xy_order != OrderKind::Grevlex && xy_order != OrderKind::Lex)
        throw InputError("toric_groebner: order must be grevlex or lex");
    auto ja = eliminate(cfg, xy_order);
    auto ia = extract_xy_basis(ja, static_cast<std::size_t>(cfg.d), xy_order);
    check_substitution_vanishes(cfg, ia, false);
    return ia;
}

std::int64_t max_degree(const GroebnerBasis& g) {
    std::int64_t m = 0;
    for (const auto& e : g.elements)
        m = std::max<std::int64_t>(m, std::max(e.lead.degree, e.tail.degree));
    return m;
}

LatticeVector substitution_image(const Configuration& cfg, const Monomial& m, bool txy) {
    const std::size_t d = static_cast<std::size_t>(cfg.d);
    const std::size_t c = static_cast<std::size_t>(cfg.c);
    const std::size_t off = txy ? d : 0;
    LatticeVector img(d, 0);
    if (txy)
        for (std::size_t j = 0; j < d; ++j) img[j] = m.exps[j];
    for (std::size_t i = 0; i < c; ++i) {
        std::int64_t mi = m.exps[off + i];
        if (!mi) continue;
        for (std::size_t j = 0; j < d; ++j) img[j] = checked_add(img[j], checked_mul(mi, cfg.a_points[i][j]));
    }
    for (std::size_t j = 0; j < d; ++j) {
        std::int64_t nj = m.exps[off + c + j];
        if (nj) img[j] = checked_add(img[j], checked_mul(nj, cfg.alpha));
    }
    return img;
}

void check_substitution_vanishes(const Configuration& cfg, const GroebnerBasis& g, bool txy) {
    for (const auto& e : g.elements) {
        if (substitution_image(cfg, e.lead, txy) != substitution_image(cfg, e.tail, txy))
            throw InvariantError("substitution check failed on a basis element of " + cfg.id() +
                                 " (engine bug)");
    }
}

namespace {

void require(bool ok, const std::string& what, const Configuration& cfg) {
    if (!ok)
        throw InvariantError("bound violation: " + what + " failed for " + cfg.id() +
                             " (a proved bound cannot fail on correct code)");
}

std::optional<Truncation> ja_truncation(const Configuration& cfg, std::int64_t prop_a6_bound) {
    const std::size_t d = static_cast<std::size_t>(cfg.d);
    const std::size_t c = static_cast<std::size_t>(cfg.c);
    Truncation t;
    t.weights.assign(d + c + d, cfg.alpha);
    for (std::size_t j = 0; j < d; ++j) t.weights[j] = 1;
    t.cap = checked_mul(cfg.alpha, prop_a6_bound);
    return t;
}

}  // namespace

PipelineResult run_pipeline(const Configuration& cfg, const ReportOptions& opts) {
    PipelineResult res;
    BoundReport& rep = res.report;
    rep.id = cfg.id();
    rep.alpha = cfg.alpha;
    rep.d = cfg.d;
    rep.c = cfg.c;
    rep.warn_gcd = cfg.warn_gcd;
    rep.warn_c1 = cfg.warn_c1;

    rep.lattice_index = lattice_index(cfg);
    rep.deg = degree_of_ring(cfg);

    SemigroupEngine eng(cfg);
    rep.r = eng.reduction_number();
    require(rep.r <= rep.deg - rep.c, "r(S) <= deg - codim", cfg);

    rep.bound_thm_a1 = std::max(rep.r + 1, 2 * rep.r - 1);
    rep.bound_thm_a1_deg = std::max<std::int64_t>(2, 2 * (rep.deg - rep.c) - 1);
    rep.bound_thm_a4 = std::max({rep.c, cfg.alpha, rep.c * (cfg.alpha - 1) - 1});
    rep.bound_sturmfels = checked_mul(rep.c, rep.deg);
    rep.bound_prop_a6 =
        cfg.d * (cfg.alpha - 1) + std::min(2 * rep.r, rep.c * (cfg.alpha - 1));
    rep.bound_eg = rep.deg - rep.c + 1;
    require(rep.bound_thm_a1 <= rep.bound_thm_a1_deg, "thmA1 <= thmA1_deg", cfg);

    res.ja_revlex = eliminate(cfg, OrderKind::Grevlex);
    check_substitution_vanishes(cfg, res.ja_revlex, true);
    res.ia_revlex = extract_xy_basis(res.ja_revlex, static_cast<std::size_t>(cfg.d), OrderKind::Grevlex);
    check_substitution_vanishes(cfg, res.ia_revlex, false);
    res.xy_vars = xy_universe(cfg.c, cfg.d);
    res.txy_vars = txy_universe(cfg.c, cfg.d);

    rep.maxdeg_revlex = max_degree(res.ia_revlex);
    require(rep.maxdeg_revlex <= rep.bound_thm_a1, "maxdeg_revlex <= thmA1 bound", cfg);
    require(rep.maxdeg_revlex <= rep.bound_thm_a4, "maxdeg_revlex <= thmA4 bound", cfg);
    require(rep.maxdeg_revlex <= rep.bound_sturmfels, "maxdeg_revlex <= c*deg", cfg);

    // cross-oracle: Hilbert data of the initial ideal must reproduce the
    // lattice dimension and multiplicity
    auto hd = hilbert_data(initial_ideal(res.ia_revlex), static_cast<std::size_t>(cfg.c + cfg.d));
    if (hd.dimension != cfg.d || hd.multiplicity != rep.deg)
        throw InvariantError("cross-oracle mismatch for " + cfg.id() + ": hilbert gives (" +
                             std::to_string(hd.dimension) + "," + std::to_string(hd.multiplicity) +
                             "), lattice gives (" + std::to_string(cfg.d) + "," + std::to_string(rep.deg) +
                             ")");

    rep.full_face_bound = eng.full_face_bound();
    if (rep.full_face_bound) require(rep.r <= *rep.full_face_bound, "r(S) <= full-face bound", cfg);

    if (opts.compute_ja_maxdeg) {
        rep.maxdeg_ja = max_degree(res.ja_revlex);
        require(*rep.maxdeg_ja <= rep.bound_prop_a6, "maxdeg(J_A) <= propA6 bound", cfg);
    }

    if (opts.compute_lex) {
        res.ia_lex = toric_groebner(cfg, OrderKind::Lex);
        rep.maxdeg_lex = max_degree(*res.ia_lex);
        require(*rep.maxdeg_lex <= rep.bound_sturmfels, "maxdeg_lex <= c*deg", cfg);
    }

    if (opts.compute_normality) {
        rep.is_normal = eng.is_normal();
        if (*rep.is_normal) require(rep.maxdeg_revlex <= cfg.d, "normal => maxdeg <= d", cfg);
    }

    if (opts.truncate_check) {
        auto truncated = eliminate(cfg, OrderKind::Grevlex, ja_truncation(cfg, rep.bound_prop_a6));
        rep.truncation_match = truncated.elements == res.ja_revlex.elements;
    }

    rep.conjecture_holds = rep.maxdeg_revlex <= rep.bound_eg;
    return res;
}

BoundReport bound_report(const Configuration& cfg, const ReportOptions& opts) {
    return run_pipeline(cfg, opts).report;
}

}  // namespace toricgb
