#pragma once

// Arbitrary-precision integer substrate and the small combinatorial kernel
// (binomial, factorial, prime sieve) everything else is built on.
//
// The integer type is boost::multiprecision::cpp_int behind the BigInt
// alias: sign-magnitude, unbounded, lossless decimal round-trip, and a
// unique representation of zero.  All helpers here are pure functions.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bernoulli {

using BigInt = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::pow;
using boost::multiprecision::sqrt;  // integer floor sqrt

/// 2^k as a BigInt.
inline BigInt pow2(unsigned k) { return BigInt(1) << k; }

/// floor(m / 2^k), correct for negative m as well.
inline BigInt floor_shr(const BigInt& m, unsigned k) {
    if (k == 0 || m == 0) return m;
    if (m > 0) return m >> k;
    // ceil(|m| / 2^k), negated
    return -((-m + (pow2(k) - 1)) >> k);
}

/// m / 2^k rounded to nearest, ties to even.
inline BigInt round_shr_half_even(const BigInt& m, unsigned k) {
    if (k == 0 || m == 0) return m;
    const bool neg = m < 0;
    BigInt a = neg ? BigInt(-m) : m;
    BigInt q = a >> k;
    BigInt r = a - (q << k);
    const BigInt half = pow2(k - 1);
    if (r > half || (r == half && (q & 1) != 0)) ++q;
    return neg ? BigInt(-q) : q;
}

/// num / den rounded to nearest, ties to even.  den must be nonzero.
inline BigInt div_round_half_even(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("div_round_half_even: zero divisor");
    BigInt a = abs(num), b = abs(den);
    BigInt q = a / b;
    BigInt r = a - q * b;
    const BigInt twice_r = r << 1;
    if (twice_r > b || (twice_r == b && (q & 1) != 0)) ++q;
    return (num < 0) != (den < 0) ? BigInt(-q) : q;
}

/// Number of decimal digits of |n|; zero has one digit.
inline std::size_t decimal_digit_count(const BigInt& n) {
    return (n < 0 ? BigInt(-n) : n).str().size();
}

/// Bit length of |n|; zero has length 0.
inline std::size_t bit_length(const BigInt& n) {
    if (n == 0) return 0;
    return boost::multiprecision::msb(n < 0 ? BigInt(-n) : n) + 1;
}

namespace detail {

// Product of the integers in [lo, hi], by binary splitting so factors stay
// balanced in size.  Empty range gives 1.
inline BigInt range_product(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) return 1;
    if (hi - lo < 8) {
        BigInt acc(lo);
        for (std::uint64_t v = lo + 1; v <= hi; ++v) acc *= v;
        return acc;
    }
    const std::uint64_t mid = lo + (hi - lo) / 2;
    return range_product(lo, mid) * range_product(mid + 1, hi);
}

}  // namespace detail

/// n!, with 0! = 1.
inline BigInt factorial(std::uint64_t n) {
    if (n < 2) return 1;
    return detail::range_product(2, n);
}

/// C(n, k).  Out-of-range k (k > n) gives 0, so identity sums need no
/// boundary cases.
inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt c(1);
    for (std::uint64_t i = 0; i < k; ++i) {
        c *= n - i;
        c /= i + 1;  // exact: c is C(n, i+1) after this step
    }
    return c;
}

/// All primes p <= limit, increasing.  Plain Eratosthenes sieve; desk-scale
/// limits only.
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        out.push_back(p);
        for (std::uint64_t m = p * p; m <= limit; m += p) composite[m] = true;
    }
    return out;
}

/// Deterministic primality by trial division; desk-scale inputs.
inline bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if ((n & 1) == 0) return false;
    for (BigInt d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

}  // namespace bernoulli
