#pragma once

// Clausen-von Staudt machinery: B_2k plus the sum of 1/p over primes p with
// (p-1) | 2k is an integer.  That gives, without computing B_2k itself,
//   - its exact reduced denominator: the product of those primes,
//   - its fractional part (mod 1, taken in [0,1)),
// and, the other way around, the exact rational from any real approximation
// that is closer than half an ulp of that denominator.

#include "bernoulli/fixed_real.hpp"
#include "bernoulli/integer.hpp"
#include "bernoulli/rational.hpp"

#include <cstdint>
#include <stdexcept>

namespace bernoulli {

/// Approximation too coarse for exact reconstruction.
class reconstruction_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_even_positive(std::int64_t two_k, const char* what) {
    if (two_k < 2 || (two_k & 1))
        throw std::domain_error(std::string(what) + ": index must be even and >= 2");
}

}  // namespace detail

/// Reduced denominator of B_2k: product of primes p with (p-1) | 2k.
inline BigInt sc_denominator(std::int64_t two_k) {
    detail::require_even_positive(two_k, "sc_denominator");
    BigInt d(1);
    for (std::uint64_t p : primes_up_to(static_cast<std::uint64_t>(two_k) + 1))
        if (two_k % static_cast<std::int64_t>(p - 1) == 0) d *= p;
    return d;
}

/// frac(B_2k) in [0, 1).  From -B_2k = sum 1/p (mod 1): the prime sum always
/// contains 1/2 + 1/3 and is never an integer, so frac(B_2k) = 1 - frac(sum).
inline Rational sc_fractional_part(std::int64_t two_k) {
    detail::require_even_positive(two_k, "sc_fractional_part");
    Rational prime_sum;
    for (std::uint64_t p : primes_up_to(static_cast<std::uint64_t>(two_k) + 1))
        if (two_k % static_cast<std::int64_t>(p - 1) == 0)
            prime_sum += Rational(BigInt(1), BigInt(p));
    return (-prime_sum).frac_mod1();
}

/// Exact B_2k from an approximation good to better than 1/(2 * denominator):
/// round(approx * D) / D.  The rounding margin is re-checked instead of
/// trusted; a violation reports reconstruction_error, the signal that the
/// caller's precision was insufficient.
inline Rational reconstruct_from_approx(std::int64_t two_k, const FixedReal& approx) {
    detail::require_even_positive(two_k, "reconstruct_from_approx");
    const BigInt d = sc_denominator(two_k);
    const FixedReal scaled = approx * d;
    const BigInt numerator = scaled.round_to_integer();
    // |scaled - numerator| must be < 1/2, i.e. the implied value within
    // 1/(2D) of approx; compare exactly at the mantissa level.
    const BigInt diff = abs(scaled.mantissa() - (numerator << scaled.scale_bits()));
    if ((diff << 1) >= pow2(scaled.scale_bits()))
        throw reconstruction_error(
            "reconstruct_from_approx: approximation too coarse for index " +
            std::to_string(two_k));
    return Rational(numerator, d);
}

}  // namespace bernoulli
