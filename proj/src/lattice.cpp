#include "toricgb/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "toricgb/bigint.hpp"
#include "toricgb/checked.hpp"

namespace toricgb {

std::int64_t coord_sum(const LatticeVector& v) {
    std::int64_t s = 0;
    for (auto x : v) s = checked_add(s, x);
    return s;
}

LatticeVector vec_add(const LatticeVector& a, const LatticeVector& b) {
    LatticeVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

LatticeVector vec_sub(const LatticeVector& a, const LatticeVector& b) {
    LatticeVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
    return r;
}

std::string vec_to_string(const LatticeVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

std::vector<LatticeVector> Configuration::generators() const {
    std::vector<LatticeVector> g = e_points;
    g.insert(g.end(), a_points.begin(), a_points.end());
    return g;
}

std::string Configuration::id() const {
    // stable FNV-1a over the a-point list
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::int64_t x) {
        h ^= static_cast<std::uint64_t>(x);
        h *= 1099511628211ull;
    };
    mix(alpha);
    mix(d);
    for (const auto& p : a_points)
        for (auto x : p) mix(x);
    std::ostringstream os;
    os << 'a' << alpha << 'd' << d << 'c' << c << '-' << std::hex << (h & 0xffffffffull);
    return os.str();
}

std::int64_t binomial_coefficient(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = checked_mul(r, n - k + i);
        r /= i;  // exact at each step
    }
    return r;
}

std::vector<LatticeVector> enumerate_simplex_points(std::int64_t alpha, std::int64_t d) {
    if (alpha < 1 || d < 1) throw InputError("enumerate_simplex_points: alpha and d must be >= 1");
    std::vector<LatticeVector> out;
    LatticeVector cur(static_cast<std::size_t>(d), 0);
    // descending lex: place the largest first coordinate first
    auto rec = [&](auto&& self, std::size_t pos, std::int64_t rest) -> void {
        if (pos + 1 == cur.size()) {
            cur[pos] = rest;
            out.push_back(cur);
            return;
        }
        for (std::int64_t v = rest; v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, rest - v);
        }
    };
    rec(rec, 0, alpha);
    return out;
}

namespace {

LatticeVector corner_point(std::int64_t alpha, std::int64_t d, std::int64_t j) {
    LatticeVector e(static_cast<std::size_t>(d), 0);
    e[static_cast<std::size_t>(j)] = alpha;
    return e;
}

bool desc_lex_less(const LatticeVector& a, const LatticeVector& b) { return b < a; }

}  // namespace

Configuration validate_configuration(std::int64_t alpha, std::int64_t d,
                                     const std::vector<LatticeVector>& points,
                                     PointOrdering ordering) {
    if (alpha < 2) throw InputError("configuration: alpha must be >= 2");
    if (d < 1) throw InputError("configuration: d must be >= 1");

    Configuration cfg;
    cfg.alpha = alpha;
    cfg.d = d;
    for (std::int64_t j = 0; j < d; ++j) cfg.e_points.push_back(corner_point(alpha, d, j));

    for (const auto& p : points) {
        if (static_cast<std::int64_t>(p.size()) != d)
            throw InputError("configuration: generator " + vec_to_string(p) + " has wrong length (expected " +
                             std::to_string(d) + ")");
        for (auto x : p)
            if (x < 0) throw InputError("configuration: generator " + vec_to_string(p) + " has a negative entry");
        if (coord_sum(p) != alpha)
            throw InputError("configuration: generator " + vec_to_string(p) + " has coordinate sum != alpha");
        bool is_corner = std::find(cfg.e_points.begin(), cfg.e_points.end(), p) != cfg.e_points.end();
        if (is_corner) continue;
        if (std::find(cfg.a_points.begin(), cfg.a_points.end(), p) != cfg.a_points.end()) continue;
        cfg.a_points.push_back(p);
    }
    if (cfg.a_points.empty()) throw InputError("configuration: no non-corner generators given");

    if (ordering == PointOrdering::Canonical) std::sort(cfg.a_points.begin(), cfg.a_points.end(), desc_lex_less);
    cfg.c = static_cast<std::int64_t>(cfg.a_points.size());
    cfg.warn_c1 = cfg.c == 1;

    std::int64_t g = 0;
    for (const auto& p : cfg.a_points)
        for (auto x : p) g = std::gcd(g, x);
    cfg.warn_gcd = g > 1;
    return cfg;
}

namespace {

using BigMatrix = std::vector<std::vector<BigInt>>;

// Diagonalize by unimodular row/column operations, accumulating only the
// column transform. Entries can blow up mid-computation, hence BigInt.
struct SmithState {
    BigMatrix m;  // rows x cols
    BigMatrix v;  // cols x cols, column transform
    std::size_t rows, cols;

    void swap_rows(std::size_t a, std::size_t b) { std::swap(m[a], m[b]); }
    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
        for (std::size_t i = 0; i < cols; ++i) std::swap(v[i][a], v[i][b]);
    }
    void negate_row(std::size_t a) {
        for (auto& x : m[a]) x = -x;
    }
    void add_row(std::size_t dst, std::size_t src, const BigInt& f) {
        for (std::size_t j = 0; j < cols; ++j) m[dst][j] += f * m[src][j];
    }
    void add_col(std::size_t dst, std::size_t src, const BigInt& f) {
        for (std::size_t i = 0; i < rows; ++i) m[i][dst] += f * m[i][src];
        for (std::size_t i = 0; i < cols; ++i) v[i][dst] += f * v[i][src];
    }

    bool find_pivot(std::size_t k, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        BigInt best;
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j) {
                if (m[i][j].is_zero()) continue;
                if (!found || BigInt::cmp_abs(m[i][j], best) < 0) {
                    best = m[i][j];
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        return found;
    }
};

}  // namespace

LatticeBasis lattice_basis(const Configuration& cfg) {
    auto gens = cfg.generators();
    SmithState st;
    st.rows = gens.size();
    st.cols = static_cast<std::size_t>(cfg.d);
    st.m.assign(st.rows, std::vector<BigInt>(st.cols));
    for (std::size_t i = 0; i < st.rows; ++i)
        for (std::size_t j = 0; j < st.cols; ++j) st.m[i][j] = BigInt(gens[i][j]);
    st.v.assign(st.cols, std::vector<BigInt>(st.cols));
    for (std::size_t i = 0; i < st.cols; ++i) st.v[i][i] = BigInt(1);

    for (std::size_t k = 0; k < st.cols; ++k) {
        for (;;) {
            std::size_t pi = k, pj = k;
            if (!st.find_pivot(k, pi, pj))
                throw InvariantError("lattice_basis: generator matrix lost full rank");
            st.swap_rows(k, pi);
            st.swap_cols(k, pj);
            if (st.m[k][k].sign() < 0) st.negate_row(k);

            bool clean = true;
            for (std::size_t i = k + 1; i < st.rows; ++i) {
                if (st.m[i][k].is_zero()) continue;
                BigInt q = st.m[i][k] / st.m[k][k];
                if (!q.is_zero()) st.add_row(i, k, -q);
                if (!st.m[i][k].is_zero()) clean = false;
            }
            for (std::size_t j = k + 1; j < st.cols; ++j) {
                if (st.m[k][j].is_zero()) continue;
                BigInt q = st.m[k][j] / st.m[k][k];
                if (!q.is_zero()) st.add_col(j, k, -q);
                if (!st.m[k][j].is_zero()) clean = false;
            }
            if (!clean) continue;

            // divisibility fixup so elementary divisors chain d_k | d_{k+1}
            bool fixed = true;
            for (std::size_t i = k + 1; i < st.rows && fixed; ++i)
                for (std::size_t j = k + 1; j < st.cols && fixed; ++j) {
                    if ((st.m[i][j] % st.m[k][k]).is_zero()) continue;
                    st.add_row(k, i, BigInt(1));
                    fixed = false;
                }
            if (fixed) break;
        }
    }

    LatticeBasis out;
    out.divisors.resize(st.cols);
    for (std::size_t k = 0; k < st.cols; ++k) {
        if (st.m[k][k].is_zero()) throw InvariantError("lattice_basis: zero elementary divisor (rank < d)");
        out.divisors[k] = st.m[k][k].to_int64();
    }
    out.col_transform.assign(st.cols, std::vector<std::int64_t>(st.cols));
    for (std::size_t i = 0; i < st.cols; ++i)
        for (std::size_t j = 0; j < st.cols; ++j) out.col_transform[i][j] = st.v[i][j].to_int64();
    return out;
}

bool LatticeBasis::contains(const LatticeVector& b) const {
    std::size_t n = divisors.size();
    if (b.size() != n) throw InputError("lattice membership: dimension mismatch");
    for (std::size_t j = 0; j < n; ++j) {
        std::int64_t z = 0;
        for (std::size_t i = 0; i < n; ++i) z = checked_add(z, checked_mul(b[i], col_transform[i][j]));
        if (z % divisors[j] != 0) return false;
    }
    return true;
}

std::int64_t lattice_index(const Configuration& cfg) {
    auto basis = lattice_basis(cfg);
    std::int64_t idx = 1;
    for (auto dv : basis.divisors) idx = checked_mul(idx, dv);
    return idx;
}

std::int64_t degree_of_ring(const Configuration& cfg) {
    std::int64_t idx = lattice_index(cfg);
    std::int64_t ad = checked_pow(cfg.alpha, cfg.d);
    if (ad % idx != 0) throw InvariantError("degree_of_ring: alpha^d not divisible by lattice index");
    std::int64_t deg = ad / idx;
    // alpha | deg holds under the relatively-prime normalization of the
    // a-coordinates; a common factor g rescales the picture to alpha/g
    if (!cfg.warn_gcd && deg % cfg.alpha != 0)
        throw InvariantError("degree_of_ring: computed multiplicity " + std::to_string(deg) +
                             " is not divisible by alpha");
    return deg;
}

std::int64_t codimension(const Configuration& cfg) { return cfg.c; }

std::int64_t eisenbud_goto_bound(const Configuration& cfg) {
    return checked_add(checked_sub(degree_of_ring(cfg), cfg.c), 1);
}

}  // namespace toricgb
