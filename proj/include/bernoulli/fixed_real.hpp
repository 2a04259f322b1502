#pragma once

// Arbitrary-precision fixed-point reals: value = mantissa * 2^(-scale_bits).
//
// Binary scaling keeps halving/doubling exact and rescaling a cheap shift,
// which is what the high-precision zeta path does all day.  Every operation
// rounds at most once, round-half-to-even, so a result at scale s is within
// one ulp (2^-s) of the exact value of the operation; addition and
// subtraction are exact.

#include "bernoulli/integer.hpp"
#include "bernoulli/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

namespace bernoulli {

class FixedReal {
  public:
    FixedReal() : mantissa_(0), scale_bits_(0) {}
    explicit FixedReal(BigInt integer_value)
        : mantissa_(std::move(integer_value)), scale_bits_(0) {}

    static FixedReal from_mantissa(BigInt mantissa, unsigned scale_bits) {
        FixedReal v;
        v.mantissa_ = std::move(mantissa);
        v.scale_bits_ = scale_bits;
        return v;
    }

    /// 2^e, exact for any sign of e.
    static FixedReal two_to(int e) {
        if (e >= 0) return FixedReal(pow2(static_cast<unsigned>(e)));
        return from_mantissa(1, static_cast<unsigned>(-e));
    }

    const BigInt& mantissa() const { return mantissa_; }
    unsigned scale_bits() const { return scale_bits_; }

    bool is_zero() const { return mantissa_ == 0; }
    bool is_negative() const { return mantissa_ < 0; }
    int sign() const { return mantissa_.sign(); }

    FixedReal operator-() const { return from_mantissa(-mantissa_, scale_bits_); }
    FixedReal abs() const { return mantissa_ < 0 ? -*this : *this; }

    /// Exact when widening; one half-even rounding when narrowing.
    FixedReal rescaled(unsigned new_scale) const {
        if (new_scale >= scale_bits_)
            return from_mantissa(mantissa_ << (new_scale - scale_bits_), new_scale);
        return from_mantissa(round_shr_half_even(mantissa_, scale_bits_ - new_scale), new_scale);
    }

    // Addition aligns to the finer scale and is exact.
    friend FixedReal operator+(const FixedReal& a, const FixedReal& b) {
        const unsigned s = std::max(a.scale_bits_, b.scale_bits_);
        return from_mantissa((a.mantissa_ << (s - a.scale_bits_)) +
                                 (b.mantissa_ << (s - b.scale_bits_)),
                             s);
    }
    friend FixedReal operator-(const FixedReal& a, const FixedReal& b) { return a + (-b); }

    /// Product rounded once to result_scale.
    static FixedReal mul(const FixedReal& a, const FixedReal& b, unsigned result_scale) {
        const unsigned product_scale = a.scale_bits_ + b.scale_bits_;
        return from_mantissa(a.mantissa_ * b.mantissa_, product_scale).rescaled(result_scale);
    }
    friend FixedReal operator*(const FixedReal& a, const FixedReal& b) {
        return mul(a, b, std::max(a.scale_bits_, b.scale_bits_));
    }

    /// Quotient rounded once to result_scale.  b must be nonzero.
    static FixedReal div(const FixedReal& a, const FixedReal& b, unsigned result_scale) {
        if (b.mantissa_ == 0) throw std::domain_error("FixedReal: division by zero");
        // value = (a.m / b.m) * 2^(b.s - a.s); mantissa at result_scale needs
        // a.m * 2^e / b.m with e = result_scale + b.s - a.s.
        const std::int64_t e = static_cast<std::int64_t>(result_scale) +
                               static_cast<std::int64_t>(b.scale_bits_) -
                               static_cast<std::int64_t>(a.scale_bits_);
        BigInt q;
        if (e >= 0)
            q = div_round_half_even(a.mantissa_ << static_cast<unsigned>(e), b.mantissa_);
        else
            q = div_round_half_even(a.mantissa_, b.mantissa_ << static_cast<unsigned>(-e));
        return from_mantissa(std::move(q), result_scale);
    }

    // Integer factors are exact; integer divisors round once at this scale.
    friend FixedReal operator*(const FixedReal& a, const BigInt& n) {
        return from_mantissa(a.mantissa_ * n, a.scale_bits_);
    }
    friend FixedReal operator*(const BigInt& n, const FixedReal& a) { return a * n; }
    friend FixedReal operator/(const FixedReal& a, const BigInt& n) {
        if (n == 0) throw std::domain_error("FixedReal: division by zero");
        return from_mantissa(div_round_half_even(a.mantissa_, n), a.scale_bits_);
    }

    /// Multiply by an exact rational, rounding once at this scale.
    FixedReal mul_rational(const Rational& q) const {
        return from_mantissa(
            div_round_half_even(mantissa_ * q.numerator(), q.denominator()), scale_bits_);
    }

    friend bool operator==(const FixedReal& a, const FixedReal& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const FixedReal& a, const FixedReal& b) { return cmp(a, b) != 0; }
    friend bool operator<(const FixedReal& a, const FixedReal& b) { return cmp(a, b) < 0; }
    friend bool operator>(const FixedReal& a, const FixedReal& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const FixedReal& a, const FixedReal& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const FixedReal& a, const FixedReal& b) { return cmp(a, b) >= 0; }

    /// Largest integer <= value.
    BigInt floor() const { return floor_shr(mantissa_, scale_bits_); }

    /// Nearest integer, ties to even.
    BigInt round_to_integer() const { return round_shr_half_even(mantissa_, scale_bits_); }

    /// Exact value as a rational.
    Rational to_rational() const { return Rational(mantissa_, pow2(scale_bits_)); }

    /// Decimal rendering with an explicit count of fractional digits; the
    /// last digit is rounded half-to-even.  Bit-exactness lives at the
    /// mantissa/scale level, not in this rendering.
    std::string to_decimal_string(std::size_t frac_digits) const {
        BigInt scaled = mantissa_ * pow(BigInt(10), static_cast<unsigned>(frac_digits));
        scaled = round_shr_half_even(scaled, scale_bits_);
        const bool neg = scaled < 0;
        std::string digits = (neg ? BigInt(-scaled) : scaled).str();
        if (digits.size() <= frac_digits)
            digits.insert(0, frac_digits - digits.size() + 1, '0');
        digits.insert(digits.size() - frac_digits, frac_digits > 0 ? "." : "");
        return (neg ? "-" : "") + digits;
    }

    /// Default digit budget: every decimal digit the scale can support.
    std::size_t default_decimal_digits() const {
        return std::max<std::size_t>(1, static_cast<std::size_t>(scale_bits_) * 30103 / 100000);
    }
    std::string to_decimal_string() const { return to_decimal_string(default_decimal_digits()); }

    friend std::ostream& operator<<(std::ostream& os, const FixedReal& v) {
        return os << v.to_decimal_string();
    }

  private:
    static int cmp(const FixedReal& a, const FixedReal& b) {
        const unsigned s = std::max(a.scale_bits_, b.scale_bits_);
        const BigInt am = a.mantissa_ << (s - a.scale_bits_);
        const BigInt bm = b.mantissa_ << (s - b.scale_bits_);
        return am < bm ? -1 : (am == bm ? 0 : 1);
    }

    BigInt mantissa_;
    unsigned scale_bits_;
};

/// Round an exact rational into fixed point: |result - q| <= 2^(-scale_bits-1),
/// ties to even.
inline FixedReal fixed_from_rational(const Rational& q, unsigned scale_bits) {
    return FixedReal::from_mantissa(
        div_round_half_even(q.numerator() << scale_bits, q.denominator()), scale_bits);
}

}  // namespace bernoulli
