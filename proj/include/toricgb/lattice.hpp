#ifndef TORICGB_LATTICE_HPP
#define TORICGB_LATTICE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "toricgb/errors.hpp"

namespace toricgb {

// A point of N^d. Entries are checked 64-bit; invariants (length d,
// non-negativity) are enforced by validate_configuration and by the
// operations that build new points.
using LatticeVector = std::vector<std::int64_t>;

std::int64_t coord_sum(const LatticeVector& v);
LatticeVector vec_add(const LatticeVector& a, const LatticeVector& b);
LatticeVector vec_sub(const LatticeVector& a, const LatticeVector& b);
std::string vec_to_string(const LatticeVector& v);

// Generator set A = {e_1..e_d, a_1..a_c} inside the dilated simplex
// { x in N^d : x_1+...+x_d = alpha }. The corner generators e_j = alpha*u_j
// are always present and stored separately from the a-points.
struct Configuration {
    std::int64_t alpha = 0;
    std::int64_t d = 0;
    std::int64_t c = 0;
    std::vector<LatticeVector> a_points;  // ordered; order fixes the x-variable naming
    std::vector<LatticeVector> e_points;  // alpha * unit vectors, derived
    bool warn_gcd = false;                // gcd of all a-coordinates exceeds 1
    bool warn_c1 = false;                 // only one non-corner generator

    // all generators, e-points first then a-points
    std::vector<LatticeVector> generators() const;
    std::string id() const;
};

// How validate_configuration orders the surviving a-points.
//   Canonical: descending lexicographic (deterministic hashing; matches the
//              listing convention used by the bundled reproduction suites).
//   AsGiven:   keep the caller's order after stripping corners/duplicates.
enum class PointOrdering { Canonical, AsGiven };

// All non-negative integer vectors of length d summing to alpha, in
// descending lexicographic order. |result| = C(alpha+d-1, d-1).
std::vector<LatticeVector> enumerate_simplex_points(std::int64_t alpha, std::int64_t d);

// Validates, strips explicitly supplied corner points, deduplicates.
// Throws InputError on wrong coordinate sum / negative entries / wrong
// length / empty a-list.
Configuration validate_configuration(std::int64_t alpha, std::int64_t d,
                                     const std::vector<LatticeVector>& points,
                                     PointOrdering ordering = PointOrdering::Canonical);

// Diagonalization data for the group ZS generated by all e_j and a_i.
// divisors are the elementary divisors (all positive, full rank d);
// col_transform is the accumulated unimodular column transform V, so that
// b lies in ZS  iff  divisors[i] | (b*V)[i] for every i.
struct LatticeBasis {
    std::vector<std::int64_t> divisors;
    std::vector<std::vector<std::int64_t>> col_transform;  // d x d
    bool contains(const LatticeVector& b) const;
};

LatticeBasis lattice_basis(const Configuration& cfg);

// [Z^d : ZS], via Smith normal form of the (c+d) x d generator matrix.
std::int64_t lattice_index(const Configuration& cfg);

// Multiplicity deg K[S] = alpha^d / lattice_index.
std::int64_t degree_of_ring(const Configuration& cfg);

std::int64_t codimension(const Configuration& cfg);

// deg K[S] - c + 1
std::int64_t eisenbud_goto_bound(const Configuration& cfg);

std::int64_t binomial_coefficient(std::int64_t n, std::int64_t k);

}  // namespace toricgb

#endif
