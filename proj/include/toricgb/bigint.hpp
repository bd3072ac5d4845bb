#ifndef TORICGB_BIGINT_HPP
#define TORICGB_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "toricgb/errors.hpp"

namespace toricgb {

// Minimal signed arbitrary-precision integer. Only the Smith normal form
// routine needs unbounded intermediates; everything else in the toolkit is
// checked 64-bit. Magnitude is little-endian base 2^32.
class BigInt {
  public:
    BigInt() = default;
    BigInt(std::int64_t v);  // NOLINT: implicit by design, mirrors int use

    bool is_zero() const { return mag_.empty(); }
    int sign() const { return mag_.empty() ? 0 : sign_; }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    bool operator==(const BigInt& o) const { return sign() == o.sign() && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;

    // Truncating division (C++ semantics): quotient rounds toward zero,
    // remainder carries the sign of the dividend.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    BigInt abs() const;
    // -1, 0, 1 comparing |a| with |b|
    static int cmp_abs(const BigInt& a, const BigInt& b);

    bool fits_int64() const;
    std::int64_t to_int64() const;  // throws InvariantError when out of range
    std::string to_string() const;

  private:
    int sign_ = 1;                    // meaningful only when mag_ nonempty
    std::vector<std::uint32_t> mag_;  // no trailing zero limbs

    void trim();
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>&, const std::vector<std::uint32_t>&);
    // pre: |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>&, const std::vector<std::uint32_t>&);
};

}  // namespace toricgb

#endif
