#pragma once

// Exact rational arithmetic.
//
// Invariants, enforced eagerly on every construction:
//   - gcd(|num|, den) == 1
//   - den >= 1, sign carried by the numerator
//   - zero is canonically 0/1
// Eager normalization means equality is plain field comparison, which the
// value tables and the text interchange format rely on.
//
// Text format: "num/den" base 10, minus sign on the numerator, "/den"
// omitted when the denominator is 1 (e.g. "-3617/510", "1").

#include "bernoulli/integer.hpp"

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace bernoulli {

class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT: implicit by design
    Rational(long long n) : num_(n), den_(1) {}          // NOLINT
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }
    int sign() const { return num_.sign(); }

    Rational operator-() const { return Rational(raw{}, -num_, den_); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    Rational reciprocal() const {
        if (num_ == 0) throw std::domain_error("Rational: reciprocal of zero");
        return num_ < 0 ? Rational(raw{}, -den_, -num_) : Rational(raw{}, den_, num_);
    }

    /// Largest integer <= value.
    BigInt floor() const {
        BigInt q = num_ / den_;
        if (num_ < 0 && q * den_ != num_) --q;
        return q;
    }

    /// value - floor(value), always in [0, 1).
    Rational frac_mod1() const { return *this - Rational(floor()); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& r) { return *this = *this + r; }
    Rational& operator-=(const Rational& r) { return *this = *this - r; }
    Rational& operator*=(const Rational& r) { return *this = *this * r; }
    Rational& operator/=(const Rational& r) { return *this = *this / r; }

    // Canonical form makes memberwise equality exact value equality.
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string to_string() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    /// Parse the text format back.  Accepts "num" and "num/den".
    static Rational parse(const std::string& text) {
        const auto parse_int = [&text](const std::string& part) {
            const std::size_t start = (!part.empty() && part[0] == '-') ? 1 : 0;
            if (part.size() == start ||
                part.find_first_not_of("0123456789", start) != std::string::npos)
                throw std::invalid_argument("Rational: cannot parse \"" + text + "\"");
            return BigInt(part);
        };
        const auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(parse_int(text));
        return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

  private:
    struct raw {};  // tag: components already normalized
    Rational(raw, BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {}

    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        const BigInt g = gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

}  // namespace bernoulli
