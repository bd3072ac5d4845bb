#include "toricgb/semigroup.hpp"

#include <algorithm>

#include "toricgb/checked.hpp"

namespace toricgb {

namespace {

std::uint64_t pack_with(const LatticeVector& v, int bits) {
    std::uint64_t key = 0;
    const std::uint64_t limit = std::uint64_t{1} << bits;
    for (auto x : v) {
        if (x < 0 || static_cast<std::uint64_t>(x) >= limit)
            throw InvariantError("graded piece: coordinate " + std::to_string(x) + " exceeds packing width");
        key = (key << bits) | static_cast<std::uint64_t>(x);
    }
    return key;
}

}  // namespace

bool GradedPiece::contains(const LatticeVector& v) const {
    for (auto x : v)
        if (x < 0) return false;
    return keys.count(pack_with(v, pack_bits)) > 0;
}

SemigroupEngine::SemigroupEngine(const Configuration& cfg) : cfg_(cfg), gens_(cfg.generators()) {
    pack_bits_ = std::min<int>(32, static_cast<int>(64 / cfg.d));
    GradedPiece zero;
    zero.n = 0;
    zero.pack_bits = pack_bits_;
    LatticeVector origin(static_cast<std::size_t>(cfg_.d), 0);
    zero.keys.insert(pack_with(origin, pack_bits_));
    zero.elements.push_back(std::move(origin));
    pieces_.push_back(std::move(zero));
}

std::uint64_t SemigroupEngine::pack(const LatticeVector& v) const { return pack_with(v, pack_bits_); }

const GradedPiece& SemigroupEngine::graded_piece(std::int64_t n) {
    if (n < 0) throw InputError("graded_piece: negative degree");
    while (static_cast<std::int64_t>(pieces_.size()) <= n) {
        const GradedPiece& prev = pieces_.back();
        GradedPiece next;
        next.n = prev.n + 1;
        next.pack_bits = pack_bits_;
        for (const auto& p : prev.elements) {
            for (const auto& g : gens_) {
                LatticeVector s = vec_add(p, g);
                std::uint64_t key = pack(s);
                if (next.keys.insert(key).second) next.elements.push_back(std::move(s));
            }
        }
        std::sort(next.elements.begin(), next.elements.end());
        pieces_.push_back(std::move(next));
    }
    return pieces_[static_cast<std::size_t>(n)];
}

bool SemigroupEngine::contains(const LatticeVector& b) {
    if (static_cast<std::int64_t>(b.size()) != cfg_.d) throw InputError("contains: dimension mismatch");
    std::int64_t s = coord_sum(b);
    if (s % cfg_.alpha != 0) return false;
    for (auto x : b)
        if (x < 0) return false;
    return graded_piece(s / cfg_.alpha).contains(b);
}

bool SemigroupEngine::reduction_holds_at(std::int64_t r) {
    const GradedPiece& hi = graded_piece(r + 1);
    const GradedPiece& lo = graded_piece(r);
    for (const auto& b : hi.elements) {
        bool covered = false;
        for (std::int64_t j = 0; j < cfg_.d && !covered; ++j) {
            auto js = static_cast<std::size_t>(j);
            if (b[js] < cfg_.alpha) continue;
            LatticeVector reduced = b;
            reduced[js] -= cfg_.alpha;
            covered = lo.contains(reduced);
        }
        if (!covered) return false;
    }
    return true;
}

std::int64_t SemigroupEngine::reduction_number() {
    if (reduction_) return *reduction_;
    std::int64_t cap = checked_add(checked_sub(degree_of_ring(cfg_), cfg_.c), 1);
    for (std::int64_t r = 1; r <= cap; ++r) {
        if (reduction_holds_at(r)) {
            reduction_ = r;
            return r;
        }
    }
    throw InvariantError("reduction_number: no reduction found up to deg - codim + 1 = " + std::to_string(cap) +
                         " for " + cfg_.id() + " (engine bug)");
}

std::vector<FaceRecord> SemigroupEngine::faces() const {
    std::vector<FaceRecord> out;
    auto gens = cfg_.generators();
    std::int64_t d = cfg_.d;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
        std::int64_t size = static_cast<std::int64_t>(__builtin_popcountll(mask));
        if (size == d) continue;  // empty face
        FaceRecord f;
        for (std::int64_t i = 0; i < d; ++i)
            if (mask & (std::uint64_t{1} << i)) f.zero_set.push_back(i + 1);  // 1-based
        f.dimension = d - 1 - size;
        for (const auto& g : gens) {
            bool on_face = true;
            for (std::int64_t i = 0; i < d && on_face; ++i)
                if ((mask & (std::uint64_t{1} << i)) && g[static_cast<std::size_t>(i)] != 0) on_face = false;
            if (on_face) f.members.push_back(g);
        }
        std::int64_t m = d - size;  // coordinates left free on the face
        std::int64_t lattice_count = binomial_coefficient(cfg_.alpha + m - 1, m - 1);
        f.is_full = static_cast<std::int64_t>(f.members.size()) == lattice_count;
        out.push_back(std::move(f));
    }
    return out;
}

std::optional<std::int64_t> SemigroupEngine::full_face_bound() const {
    std::optional<std::int64_t> best;
    for (const auto& f : faces()) {
        if (!f.is_full) continue;
        std::int64_t i = f.dimension;
        std::int64_t bound = checked_add(checked_pow(cfg_.alpha, cfg_.d - 1 - i), i - 1);
        if (!best || bound < *best) best = bound;
    }
    return best;
}

const LatticeBasis& SemigroupEngine::basis() {
    if (!basis_) basis_ = lattice_basis(cfg_);
    return *basis_;
}

bool SemigroupEngine::is_normal() {
    // scan the box [0, alpha-1]^d for group members missing from S
    LatticeVector b(static_cast<std::size_t>(cfg_.d), 0);
    const LatticeBasis& zs = basis();
    auto rec = [&](auto&& self, std::size_t pos) -> bool {
        if (pos == b.size()) {
            std::int64_t s = coord_sum(b);
            if (s == 0 || s % cfg_.alpha != 0) return true;
            if (!zs.contains(b)) return true;
            return contains(b);
        }
        for (std::int64_t v = 0; v < cfg_.alpha; ++v) {
            b[pos] = v;
            if (!self(self, pos + 1)) return false;
        }
        b[pos] = 0;
        return true;
    };
    return rec(rec, 0);
}

std::int64_t reduction_number(const Configuration& cfg) { return SemigroupEngine(cfg).reduction_number(); }
bool is_normal(const Configuration& cfg) { return SemigroupEngine(cfg).is_normal(); }
std::vector<FaceRecord> faces(const Configuration& cfg) { return SemigroupEngine(cfg).faces(); }
std::optional<std::int64_t> full_face_bound(const Configuration& cfg) {
    return SemigroupEngine(cfg).full_face_bound();
}

}  // namespace toricgb
