#ifndef TORICGB_SEMIGROUP_HPP
#define TORICGB_SEMIGROUP_HPP

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "toricgb/lattice.hpp"

namespace toricgb {

// The set nA of all sums of n generators (corners included).
struct GradedPiece {
    std::int64_t n = 0;
    std::vector<LatticeVector> elements;     // insertion order, deterministic
    std::unordered_set<std::uint64_t> keys;  // packed coordinates, for membership
    int pack_bits = 0;
    bool contains(const LatticeVector& v) const;
};

// One face of the simplex, indexed by its zero-set I: the face lives where
// all coordinates in I vanish. dimension = d-1-|I|. A_I collects the
// generators supported off I; the face is full when A_I exhausts every
// simplex lattice point on the face.
struct FaceRecord {
    std::vector<std::int64_t> zero_set;
    std::int64_t dimension = 0;
    bool is_full = false;
    std::vector<LatticeVector> members;
};

// Degree-graded arithmetic for one configuration. Pieces are memoized, so
// keep one engine per configuration per worker; the configuration itself is
// immutable and freely shared.
class SemigroupEngine {
  public:
    explicit SemigroupEngine(const Configuration& cfg);

    const Configuration& config() const { return cfg_; }
    const GradedPiece& graded_piece(std::int64_t n);
    bool contains(const LatticeVector& b);

    // least r >= 1 with (r+1)A = {e_1..e_d} + rA; iteration capped by the
    // reduction-number bound deg - codim + 1 (exceeding it means an engine
    // bug, never a valid outcome)
    std::int64_t reduction_number();

    std::vector<FaceRecord> faces() const;
    std::optional<std::int64_t> full_face_bound() const;

    // S = ZS n N^d, decided on the box [0, alpha-1]^d: every element of
    // ZS n N^d is a box element plus a non-negative combination of the
    // corner generators, and box elements have degree <= d-1.
    bool is_normal();

    // (r+1)A included in {e} + rA (the reverse inclusion is automatic
    // because the corners are generators)
    bool reduction_holds_at(std::int64_t r);

  private:
    Configuration cfg_;
    std::vector<LatticeVector> gens_;
    std::vector<GradedPiece> pieces_;
    std::optional<LatticeBasis> basis_;
    std::optional<std::int64_t> reduction_;
    int pack_bits_ = 0;

    std::uint64_t pack(const LatticeVector& v) const;
    const LatticeBasis& basis();
};

// convenience wrappers (each builds a throwaway engine)
std::int64_t reduction_number(const Configuration& cfg);
bool is_normal(const Configuration& cfg);
std::vector<FaceRecord> faces(const Configuration& cfg);
std::optional<std::int64_t> full_face_bound(const Configuration& cfg);

}  // namespace toricgb

#endif
