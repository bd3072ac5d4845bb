#include "toricgb/presets.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "toricgb/config_io.hpp"
#include "toricgb/semigroup.hpp"
#include "toricgb/sweep.hpp"

namespace toricgb {

bool PresetOutcome::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const PresetCheck& c) { return c.pass; });
}

namespace {

using Exps = std::vector<std::uint16_t>;

Binomial bino(const Exps& lead, const Exps& tail) {
    return Binomial{make_monomial(lead), make_monomial(tail)};
}

bool same_basis(const GroebnerBasis& computed, std::vector<Binomial> expected) {
    std::vector<Binomial> got = computed.elements;
    auto less = [](const Binomial& a, const Binomial& b) {
        return a.lead.exps != b.lead.exps ? a.lead.exps < b.lead.exps : a.tail.exps < b.tail.exps;
    };
    std::sort(got.begin(), got.end(), less);
    std::sort(expected.begin(), expected.end(), less);
    return got == expected;
}

bool same_monomial_set(const std::vector<Monomial>& computed, std::vector<Exps> expected) {
    std::vector<Exps> got;
    for (const auto& m : computed) got.push_back(m.exps);
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    return got == expected;
}

void add(PresetOutcome& out, const std::string& name, bool pass, const std::string& detail = "") {
    out.checks.push_back({name, pass, pass ? "" : detail});
}

template <typename T>
void add_eq(PresetOutcome& out, const std::string& name, const T& got, const T& want) {
    std::ostringstream os;
    os << "expected " << want << ", got " << got;
    add(out, name, got == want, os.str());
}

std::string basis_diff(const GroebnerBasis& g, const VariableUniverse& u) {
    return "computed:\n" + basis_to_string(g, u);
}

Configuration full_configuration(std::int64_t alpha, std::int64_t d) {
    return validate_configuration(alpha, d, enumerate_simplex_points(alpha, d));
}

Configuration example_a1a3_configuration() {
    return validate_configuration(4, 2, {{4, 0}, {3, 1}, {1, 3}, {0, 4}});
}

PresetOutcome preset_example_a1a3() {
    PresetOutcome out{"example-A1A3", {}};
    Configuration cfg = example_a1a3_configuration();
    ReportOptions opts;
    opts.compute_lex = true;
    PipelineResult res = run_pipeline(cfg, opts);

    // variables x1 x2 y1 y2
    std::vector<Binomial> revlex_expected = {
        bino({1, 1, 0, 0}, {0, 0, 1, 1}),  // x1*x2 - y1*y2
        bino({3, 0, 0, 0}, {0, 1, 2, 0}),  // x1^3 - x2*y1^2
        bino({0, 3, 0, 0}, {1, 0, 0, 2}),  // x2^3 - x1*y2^2
        bino({0, 2, 1, 0}, {2, 0, 0, 1}),  // x2^2*y1 - x1^2*y2
    };
    std::vector<Binomial> lex_expected = {
        bino({1, 1, 0, 0}, {0, 0, 1, 1}),  // x1*x2 - y1*y2
        bino({3, 0, 0, 0}, {0, 1, 2, 0}),  // x1^3 - x2*y1^2
        bino({1, 0, 0, 2}, {0, 3, 0, 0}),  // x1*y2^2 - x2^3
        bino({2, 0, 0, 1}, {0, 2, 1, 0}),  // x1^2*y2 - x2^2*y1
        bino({0, 4, 0, 0}, {0, 0, 1, 3}),  // x2^4 - y1*y2^3
    };
    add(out, "revlex reduced basis is the expected 4 binomials",
        same_basis(res.ia_revlex, revlex_expected), basis_diff(res.ia_revlex, res.xy_vars));
    add(out, "lex reduced basis is the expected 5 binomials", same_basis(*res.ia_lex, lex_expected),
        basis_diff(*res.ia_lex, res.xy_vars));
    add_eq(out, "r(S) = 2", res.report.r, std::int64_t{2});
    add_eq(out, "reduction bound max{r+1,2r-1} = 3", res.report.bound_thm_a1, std::int64_t{3});
    add_eq(out, "degree bound deg-c+1 = 3", res.report.bound_eg, std::int64_t{3});
    add_eq(out, "maxdeg revlex = 3", res.report.maxdeg_revlex, std::int64_t{3});
    add_eq(out, "maxdeg lex = 4", *res.report.maxdeg_lex, std::int64_t{4});
    add(out, "conjectured bound holds", res.report.conjecture_holds, "conjecture_holds is false");
    return out;
}

PresetOutcome preset_example_a1b() {
    PresetOutcome out{"example-A1b", {}};
    const std::vector<std::pair<std::int64_t, std::int64_t>> grid = {
        {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}};
    for (auto [d, alpha] : grid) {
        std::string tag = "(d=" + std::to_string(d) + ", alpha=" + std::to_string(alpha) + ")";
        // delete the inner points (beta, alpha-beta, 0, ...) with 2 <= beta <= alpha-2
        std::vector<LatticeVector> deleted;
        for (std::int64_t beta = 2; beta <= alpha - 2; ++beta) {
            LatticeVector v(static_cast<std::size_t>(d), 0);
            v[0] = beta;
            v[1] = alpha - beta;
            deleted.push_back(v);
        }
        LatticeVector a1(static_cast<std::size_t>(d), 0), a2(static_cast<std::size_t>(d), 0);
        a1[0] = alpha - 1;
        a1[1] = 1;
        a2[0] = 1;
        a2[1] = alpha - 1;
        std::vector<LatticeVector> pts = {a1, a2};
        for (const auto& p : enumerate_simplex_points(alpha, d)) {
            if (std::find(p.begin(), p.end(), alpha) != p.end()) continue;
            if (std::find(deleted.begin(), deleted.end(), p) != deleted.end()) continue;
            if (p == a1 || p == a2) continue;
            pts.push_back(p);
        }
        Configuration cfg = validate_configuration(alpha, d, pts, PointOrdering::AsGiven);
        PipelineResult res = run_pipeline(cfg);
        add_eq(out, tag + " r(S) = alpha-2", res.report.r, alpha - 2);

        std::size_t n = static_cast<std::size_t>(cfg.c + cfg.d);
        Exps lead(n, 0), tail(n, 0);
        lead[0] = static_cast<std::uint16_t>(alpha - 1);                  // x1^(alpha-1)
        tail[1] = 1;                                                      // x2
        tail[static_cast<std::size_t>(cfg.c)] = static_cast<std::uint16_t>(alpha - 2);  // y1^(alpha-2)
        Binomial want = bino(lead, tail);
        bool found = std::any_of(res.ia_revlex.elements.begin(), res.ia_revlex.elements.end(),
                                 [&](const Binomial& b) { return b == want; });
        add(out, tag + " basis contains x1^" + std::to_string(alpha - 1) + " - x2*y1^" + std::to_string(alpha - 2),
            found, basis_diff(res.ia_revlex, res.xy_vars));
    }
    return out;
}

Configuration remark_c1b_configuration() {
    return validate_configuration(
        3, 3, {{2, 0, 1}, {1, 2, 0}, {1, 1, 1}, {1, 0, 2}, {0, 2, 1}, {0, 1, 2}});
}

PresetOutcome preset_remark_c1b() {
    PresetOutcome out{"remark-C1b", {}};
    Configuration cfg = remark_c1b_configuration();
    PipelineResult res = run_pipeline(cfg);

    // variables x1..x6 y1..y3 (indices 0..5, 6..8)
    auto quad = [](int a, int b) {
        Exps e(9, 0);
        e[static_cast<std::size_t>(a)] += 1;
        e[static_cast<std::size_t>(b)] += 1;
        return e;
    };
    std::vector<Exps> expected = {
        quad(0, 1), quad(1, 2), quad(1, 4), quad(0, 0), quad(0, 2), quad(2, 2), quad(1, 3),
        quad(1, 5), quad(2, 4), quad(4, 4), quad(0, 3), quad(2, 3), quad(3, 4), quad(3, 3),
        quad(2, 5), quad(4, 5), quad(3, 5), quad(5, 5),
    };
    Exps x2cube(9, 0);
    x2cube[1] = 3;
    expected.push_back(x2cube);
    Exps mixed(9, 0);  // x1*x6*y2
    mixed[0] = 1;
    mixed[5] = 1;
    mixed[7] = 1;
    expected.push_back(mixed);

    auto leads = initial_ideal(res.ia_revlex);
    add(out, "in(I_A) has the expected 20 minimal generators", same_monomial_set(leads, expected),
        basis_diff(res.ia_revlex, res.xy_vars));
    add_eq(out, "deg K[S] = 9", res.report.deg, std::int64_t{9});
    add_eq(out, "codim = 6", res.report.c, std::int64_t{6});
    add_eq(out, "degree bound deg-c+1 = 4", res.report.bound_eg, std::int64_t{4});
    add_eq(out, "maxdeg revlex = 3", res.report.maxdeg_revlex, std::int64_t{3});
    add(out, "conjectured bound holds", res.report.conjecture_holds, "conjecture_holds is false");
    return out;
}

PresetOutcome preset_prop_b2_2a() {
    PresetOutcome out{"propB2-2a", {}};
    const std::vector<LatticeVector> a2_choices = {{2, 0, 1}, {1, 0, 2}};
    const std::vector<LatticeVector> a3_choices = {{0, 2, 1}, {0, 1, 2}};
    for (const auto& a2 : a2_choices) {
        for (const auto& a3 : a3_choices) {
            Configuration cfg = validate_configuration(3, 3, {{2, 1, 0}, a2, a3, {1, 1, 1}});
            std::int64_t r = reduction_number(cfg);
            std::string tag = "a2=" + vec_to_string(a2) + " a3=" + vec_to_string(a3);
            add(out, "completion " + tag + " has r <= 3", r <= 3, "r = " + std::to_string(r));
        }
    }
    return out;
}

PresetOutcome preset_prop_b2_2b() {
    PresetOutcome out{"propB2-2b", {}};
    SweepSpec spec;
    spec.alpha = 3;
    spec.d = 3;
    spec.k = 1;
    spec.checks = {"r == 2"};
    SweepResult res = run_sweep(spec);
    add_eq(out, "one-point deletions fall into 2 symmetry classes", res.records.size(), std::size_t{2});
    for (const auto& rec : res.records)
        add(out, "class " + rec.incidence_signature + " has r = 2", rec.report.r == 2,
            "r = " + std::to_string(rec.report.r));
    return out;
}

PresetOutcome preset_prop_b2_fig34() {
    PresetOutcome out{"propB2-fig34", {}};
    SweepSpec spec;
    spec.alpha = 3;
    spec.d = 4;
    spec.k = 4;
    spec.predicate = parse_predicate("facet-min=2");
    spec.checks = {"r <= 8"};
    SweepResult res = run_sweep(spec);
    add_eq(out, "exactly 2 facet-incidence situations", res.situation_count, std::size_t{2});

    std::map<std::string, std::vector<std::int64_t>> by_sig;
    for (const auto& rec : res.records) by_sig[rec.incidence_signature].push_back(rec.report.r);
    for (const auto& rec : res.records)
        add(out, "class " + rec.report.id + " (" + rec.incidence_signature + ") has r <= 8",
            rec.report.r <= 8, "r = " + std::to_string(rec.report.r));

    // opposite-edge pattern: a single class with r = 2; cyclic pattern: all r <= 8
    for (const auto& [sig, rs] : by_sig) {
        bool double_edges = sig.find("{1,2}{1,2}") != std::string::npos;
        if (double_edges) {
            add(out, "situation " + sig + " is a single class", rs.size() == 1,
                std::to_string(rs.size()) + " classes");
            add(out, "situation " + sig + " has r = 2", rs.size() == 1 && rs[0] == 2,
                "r = " + (rs.empty() ? std::string("?") : std::to_string(rs[0])));
        }
    }
    return out;
}

PresetOutcome preset_prop_b3_small() {
    PresetOutcome out{"propB3-small", {}};
    const std::vector<std::pair<std::int64_t, std::int64_t>> cases = {
        {3, 1}, {3, 2}, {4, 1}, {4, 2}, {5, 1}};
    for (auto [alpha, k] : cases) {
        LatticeVector fixed = {alpha - 1, 1, 0};
        SweepSpec spec;
        spec.alpha = alpha;
        spec.d = 3;
        spec.k = k;
        spec.predicate.kind = Predicate::Kind::MustDelete;
        spec.predicate.must = fixed;
        spec.checks = {alpha == 4 ? "r <= 3" : "r == 2"};
        SweepResult res = run_sweep(spec);
        std::string tag = "alpha=" + std::to_string(alpha) + " k=" + std::to_string(k);
        bool pass = res.all_passed && !res.records.empty();
        std::ostringstream detail;
        for (const auto& rec : res.records)
            if (!rec.checks.empty() && !rec.checks[0].pass)
                detail << rec.report.id << " has r = " << rec.report.r << "; ";
        add(out,
            tag + " (" + std::to_string(res.records.size()) + " classes): " +
                (alpha == 4 ? "r <= 3" : "r == 2") + " throughout",
            pass, detail.str());
    }
    return out;
}

PresetOutcome preset_sturmfels_normal() {
    PresetOutcome out{"sturmfels-normal-spotcheck", {}};
    ReportOptions opts;
    opts.compute_normality = true;
    for (std::int64_t alpha = 2; alpha <= 4; ++alpha) {
        for (std::int64_t d = 2; d <= 4; ++d) {
            Configuration cfg = full_configuration(alpha, d);
            BoundReport rep = bound_report(cfg, opts);
            std::string tag = "full M(" + std::to_string(alpha) + "," + std::to_string(d) + ")";
            add(out, tag + " is normal", rep.is_normal && *rep.is_normal, "reported non-normal");
            add(out, tag + " has maxdeg <= d", rep.maxdeg_revlex <= d,
                "maxdeg = " + std::to_string(rep.maxdeg_revlex));
        }
    }
    BoundReport rep = bound_report(example_a1a3_configuration(), opts);
    add(out, "the deleted-point example reports non-normal", rep.is_normal && !*rep.is_normal,
        "reported normal");
    return out;
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"example-A1A3", "example-A1b",  "remark-C1b",   "propB2-2a",
            "propB2-2b",    "propB2-fig34", "propB3-small", "sturmfels-normal-spotcheck"};
}

PresetOutcome run_preset(const std::string& name) {
    if (name == "example-A1A3") return preset_example_a1a3();
    if (name == "example-A1b") return preset_example_a1b();
    if (name == "remark-C1b") return preset_remark_c1b();
    if (name == "propB2-2a") return preset_prop_b2_2a();
    if (name == "propB2-2b") return preset_prop_b2_2b();
    if (name == "propB2-fig34") return preset_prop_b2_fig34();
    if (name == "propB3-small") return preset_prop_b3_small();
    if (name == "sturmfels-normal-spotcheck") return preset_sturmfels_normal();
    throw InputError("unknown preset '" + name + "'; available: example-A1A3, example-A1b, remark-C1b, "
                     "propB2-2a, propB2-2b, propB2-fig34, propB3-small, sturmfels-normal-spotcheck");
}

}  // namespace toricgb
