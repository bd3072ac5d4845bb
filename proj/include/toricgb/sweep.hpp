#ifndef TORICGB_SWEEP_HPP
#define TORICGB_SWEEP_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "toricgb/pipeline.hpp"

namespace toricgb {

// Deletion-set predicates. A sweep enumerates A = M_{alpha,d} minus k
// non-vertex points; the predicate filters the deleted sets.
struct Predicate {
    enum class Kind { None, EdgeOneEach, FacetMin, MustDelete, EdgeFull };
    Kind kind = Kind::None;
    std::int64_t min_per_facet = 0;       // FacetMin
    LatticeVector must;                   // MustDelete
    std::int64_t edge_a = 0, edge_b = 0;  // EdgeFull, 1-based coordinates
};

// "none" | "edge-one-each" | "facet-min=M" | "must-delete=V1,...,Vd" |
// "edge-full=I,J"
Predicate parse_predicate(const std::string& text);
bool predicate_holds(const Predicate& p, std::int64_t alpha, std::int64_t d,
                     const std::vector<LatticeVector>& deleted);

// Check expressions evaluated against a report: named checks
// ("conjecture", "thmA1", "thmA4", "propA6", "lemmaA2", "sturmfels",
// "normal", "not-normal") or comparisons "FIELD OP INT" with FIELD in
// {r, deg, c, maxdeg, maxdeg_revlex, maxdeg_lex, maxdeg_ja} and OP in
// {<, <=, ==, !=, >=, >}.
struct CheckOutcome {
    std::string expr;
    bool pass = false;
};
bool evaluate_check(const std::string& expr, const BoundReport& rep);
// true when the expression needs an optional report field
bool check_needs_ja(const std::string& expr);
bool check_needs_normality(const std::string& expr);

struct SweepSpec {
    std::int64_t alpha = 0, d = 0, k = 0;
    Predicate predicate;
    std::vector<std::string> checks;
    bool symmetry = true;
    bool verify_members = false;  // re-run up to 3 extra members per class
    std::int64_t cap = 1000000;   // raw enumeration guard
    int threads = 0;              // 0: TORICGB_THREADS or hardware
    ReportOptions options;
};

struct ResultRecord {
    std::vector<LatticeVector> canonical_a;
    std::vector<LatticeVector> deleted;
    std::string incidence_signature;
    std::size_t class_size = 1;
    BoundReport report;
    std::vector<CheckOutcome> checks;
    double elapsed_ms = 0;  // never serialized, records must be byte-stable
};

struct SweepResult {
    std::vector<ResultRecord> records;  // canonical order
    std::size_t raw_count = 0;          // predicate-passing configurations
    std::size_t situation_count = 0;    // distinct incidence signatures
    bool all_passed = true;
};

// lexicographic minimum over all d! coordinate permutations of the
// descending-sorted point list
std::vector<LatticeVector> canonical_point_list(std::int64_t d, const std::vector<LatticeVector>& pts);

// canonical form of the multiset of zero-sets of the deleted points; two
// deletion patterns share a signature iff some coordinate permutation maps
// one pattern of face incidences onto the other
std::string incidence_signature(std::int64_t d, const std::vector<LatticeVector>& deleted);

SweepResult run_sweep(const SweepSpec& spec);
void write_sweep_jsonl(const SweepSpec& spec, const SweepResult& result, std::ostream& out);

int sweep_thread_count(int requested);

}  // namespace toricgb

#endif
