#include "toricgb/bigint.hpp"

#include <algorithm>

namespace toricgb {

BigInt::BigInt(std::int64_t v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // careful with INT64_MIN: negate as unsigned
    std::uint64_t u = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffu));
    if (u >> 32) mag_.push_back(static_cast<std::uint32_t>(u >> 32));
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 1;
}

int BigInt::cmp_abs(const BigInt& a, const BigInt& b) {
    if (a.mag_.size() != b.mag_.size()) return a.mag_.size() < b.mag_.size() ? -1 : 1;
    for (std::size_t i = a.mag_.size(); i-- > 0;) {
        if (a.mag_[i] != b.mag_[i]) return a.mag_[i] < b.mag_[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    const auto& lo = a.size() < b.size() ? a : b;
    const auto& hi = a.size() < b.size() ? b : a;
    std::vector<std::uint32_t> out(hi.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        std::uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
        out[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    out[hi.size()] = static_cast<std::uint32_t>(carry);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) {
            s += (std::int64_t{1} << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<std::uint32_t>(s);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    r.trim();
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.sign_ = 1;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    BigInt r;
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (sign_ == o.sign_) {
        r.sign_ = sign_;
        r.mag_ = add_mag(mag_, o.mag_);
    } else {
        int c = cmp_abs(*this, o);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.sign_ = sign_;
            r.mag_ = sub_mag(mag_, o.mag_);
        } else {
            r.sign_ = o.sign_;
            r.mag_ = sub_mag(o.mag_, mag_);
        }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (is_zero() || o.is_zero()) return BigInt();
    BigInt r;
    r.sign_ = sign_ * o.sign_;
    r.mag_.assign(mag_.size() + o.mag_.size(), 0);
    for (std::size_t i = 0; i < mag_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < o.mag_.size(); ++j) {
            std::uint64_t cur = r.mag_[i + j] + static_cast<std::uint64_t>(mag_[i]) * o.mag_[j] + carry;
            r.mag_[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        std::size_t k = i + o.mag_.size();
        while (carry) {
            std::uint64_t cur = r.mag_[k] + carry;
            r.mag_[k] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

bool BigInt::operator<(const BigInt& o) const {
    if (sign() != o.sign()) return sign() < o.sign();
    int c = cmp_abs(*this, o);
    return sign() >= 0 ? c < 0 : c > 0;
}

namespace {

// magnitude helpers for shift-subtract division
int bit_length(const std::vector<std::uint32_t>& m) {
    if (m.empty()) return 0;
    int bits = 32 * static_cast<int>(m.size() - 1);
    std::uint32_t top = m.back();
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

bool get_bit(const std::vector<std::uint32_t>& m, int i) {
    std::size_t limb = static_cast<std::size_t>(i) / 32;
    if (limb >= m.size()) return false;
    return (m[limb] >> (i % 32)) & 1u;
}

}  // namespace

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw InvariantError("BigInt division by zero");
    if (a.is_zero()) {
        q = BigInt();
        r = BigInt();
        return;
    }
    // binary long division on magnitudes
    std::vector<std::uint32_t> qm;
    BigInt rem;  // nonnegative accumulator
    int nbits = bit_length(a.mag_);
    qm.assign(static_cast<std::size_t>(nbits + 31) / 32, 0);
    BigInt babs = b.abs();
    for (int i = nbits - 1; i >= 0; --i) {
        // rem = rem*2 + bit
        rem = rem + rem;
        if (get_bit(a.mag_, i)) rem = rem + BigInt(1);
        if (!(cmp_abs(rem, babs) < 0)) {
            rem = rem - babs;
            qm[static_cast<std::size_t>(i) / 32] |= (1u << (i % 32));
        }
    }
    while (!qm.empty() && qm.back() == 0) qm.pop_back();
    q = BigInt();
    q.mag_ = std::move(qm);
    q.sign_ = a.sign_ * b.sign_;
    q.trim();
    r = rem;
    r.sign_ = a.sign_;
    r.trim();
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

bool BigInt::fits_int64() const {
    if (mag_.size() > 2) return false;
    if (mag_.size() < 2) return true;
    std::uint64_t u = (static_cast<std::uint64_t>(mag_[1]) << 32) | mag_[0];
    if (sign_ > 0) return u <= static_cast<std::uint64_t>(INT64_MAX);
    return u <= static_cast<std::uint64_t>(INT64_MAX) + 1;
}

std::int64_t BigInt::to_int64() const {
    if (!fits_int64()) throw InvariantError("BigInt value does not fit in 64 bits");
    if (mag_.empty()) return 0;
    std::uint64_t u = mag_[0];
    if (mag_.size() == 2) u |= static_cast<std::uint64_t>(mag_[1]) << 32;
    if (sign_ < 0) return static_cast<std::int64_t>(~u + 1);
    return static_cast<std::int64_t>(u);
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::string digits;
    BigInt t = abs();
    BigInt ten(10), q, r;
    while (!t.is_zero()) {
        divmod(t, ten, q, r);
        digits.push_back(static_cast<char>('0' + r.to_int64()));
        t = q;
    }
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace toricgb
