#ifndef TORICGB_PIPELINE_HPP
#define TORICGB_PIPELINE_HPP

#include <optional>
#include <string>

#include "toricgb/groebner.hpp"
#include "toricgb/lattice.hpp"
#include "toricgb/semigroup.hpp"

namespace toricgb {

// All computed invariants and bound comparisons for one configuration.
// A violated bound field is never reported: proved bounds that fail indicate
// a bug and raise InvariantError instead. A false conjecture_holds is a
// reportable finding, not an error.
struct BoundReport {
    std::string id;
    std::int64_t alpha = 0, d = 0, c = 0;
    std::int64_t r = 0;
    std::int64_t deg = 0;
    std::int64_t lattice_index = 0;
    std::int64_t maxdeg_revlex = 0;
    std::optional<std::int64_t> maxdeg_lex;
    std::optional<std::int64_t> maxdeg_ja;
    std::int64_t bound_thm_a1 = 0;      // max{r+1, 2r-1}
    std::int64_t bound_thm_a1_deg = 0;  // max{2, 2(deg-c)-1}
    std::int64_t bound_thm_a4 = 0;      // max{c, alpha, c(alpha-1)-1}
    std::int64_t bound_sturmfels = 0;   // c * deg
    std::int64_t bound_prop_a6 = 0;     // d(alpha-1) + min{2r, c(alpha-1)}
    std::int64_t bound_eg = 0;          // deg - c + 1
    std::optional<std::int64_t> full_face_bound;
    std::optional<bool> is_normal;
    bool conjecture_holds = false;  // maxdeg_revlex <= bound_eg
    std::optional<bool> truncation_match;
    bool warn_gcd = false, warn_c1 = false;
};

struct ReportOptions {
    bool compute_lex = false;
    bool compute_ja_maxdeg = false;
    bool compute_normality = false;
    bool truncate_check = false;
};

// {x_i - t^{a_i}} u {y_j - t_j^alpha} over t,x,y; the t-term leads because
// the t-block dominates the elimination order.
std::vector<Binomial> build_elimination_system(const Configuration& cfg);

// Reduced basis of the toric ideal under the given x,y order, obtained by
// eliminating the t-block from the system above.
GroebnerBasis toric_groebner(const Configuration& cfg, OrderKind xy_order);

// Maximum standard degree over basis elements (terms agree in degree for the
// homogeneous toric ideal; for the elimination ideal the larger term counts).
std::int64_t max_degree(const GroebnerBasis& g);

// Everything the report needs, plus the bases for callers that verify them.
struct PipelineResult {
    BoundReport report;
    GroebnerBasis ja_revlex;  // reduced basis of the elimination ideal
    GroebnerBasis ia_revlex;  // reduced toric basis, grevlex
    std::optional<GroebnerBasis> ia_lex;
    VariableUniverse xy_vars, txy_vars;
};

PipelineResult run_pipeline(const Configuration& cfg, const ReportOptions& opts = {});
BoundReport bound_report(const Configuration& cfg, const ReportOptions& opts = {});

// Image of a monomial under x_i -> t^{a_i}, y_j -> t_j^alpha (t-exponents,
// if present, pass through); both terms of every basis element must agree.
LatticeVector substitution_image(const Configuration& cfg, const Monomial& m, bool txy);
void check_substitution_vanishes(const Configuration& cfg, const GroebnerBasis& g, bool txy);

}  // namespace toricgb

#endif
