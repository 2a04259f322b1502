#pragma once

// High-precision fixed-point constants and zeta values, and the direct
// method built on them: any single B_2k computed exactly, without its
// predecessors, from
//
//   B_2k = (-1)^(k-1) * 2 * (2k)! / (2*pi)^(2k) * zeta(2k)
//
// evaluated at a planned precision and snapped to the exact rational via
// the Clausen-von Staudt denominator.  The reconstruction margin check in
// staudt_clausen makes the result unconditionally correct; the precision
// plan only has to be good enough for that check to pass.
//
// zeta(2k) itself:
//   - direct term summation with the analytic tail bound
//         sum_{n>N} n^(-2k) < N^(1-2k) / (2k-1)
//     whenever that needs a sane number of terms (always true for the
//     large indices this path exists for);
//   - otherwise (small 2k at high precision, where the direct sum would
//     need ~2^(scale/(2k-1)) terms) the alternating-series acceleration of
//     P. Borwein, which needs ~1.31 digits' worth of terms regardless of
//     the index and stays independent of Bernoulli numbers.

#include "bernoulli/fixed_real.hpp"
#include "bernoulli/integer.hpp"
#include "bernoulli/rational.hpp"
#include "bernoulli/staudt_clausen.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace bernoulli {

/// Digit/precision budget for one direct B_2k computation.
struct PrecisionPlan {
    std::int64_t two_k = 0;
    std::int64_t estimated_decimal_digits = 0;
    unsigned working_scale_bits = 0;
    unsigned guard_bits = 0;
};

namespace detail {

// atan(1/x) * 2^w by a shrinking-remainder cascade: t holds 2^w / x^(2i+1),
// truncated; each term and each cascade step lose at most one ulp, so the
// total error stays within a few ulps per term.
inline BigInt atan_inv_scaled(std::uint64_t x, unsigned w) {
    BigInt t = pow2(w) / x;
    BigInt acc(0);
    const std::uint64_t x2 = x * x;
    for (std::uint64_t i = 0; t != 0; ++i) {
        const BigInt term = t / (2 * i + 1);
        if (i & 1)
            acc -= term;
        else
            acc += term;
        t /= x2;
    }
    return acc;
}

}  // namespace detail

/// pi to |error| <= 2^(-scale_bits+2) (actual error far smaller), by the
/// Machin formula pi = 16*atan(1/5) - 4*atan(1/239).
inline FixedReal pi_fixed(unsigned scale_bits) {
    if (scale_bits < 8) throw std::domain_error("pi_fixed: scale_bits must be >= 8");
    const unsigned w = scale_bits + 32;
    const BigInt m = 16 * detail::atan_inv_scaled(5, w) - 4 * detail::atan_inv_scaled(239, w);
    return FixedReal::from_mantissa(m, w).rescaled(scale_bits);
}

/// e from its factorial-reciprocal series sum 1/n!.
inline FixedReal e_fixed(unsigned scale_bits) {
    const unsigned w = scale_bits + 32;
    BigInt t = pow2(w);  // 2^w / n!, truncated as it cascades
    BigInt acc = t;      // n = 0
    for (std::uint64_t n = 1; t != 0; ++n) {
        t /= n;
        acc += t;
    }
    return FixedReal::from_mantissa(acc, w).rescaled(scale_bits);
}

/// base^exp with one half-even rounding per multiplication, at result_scale.
inline FixedReal fixed_pow(const FixedReal& base, std::uint64_t exp, unsigned result_scale) {
    FixedReal result = FixedReal::two_to(0).rescaled(result_scale);
    FixedReal square = base.rescaled(result_scale);
    while (exp != 0) {
        if (exp & 1) result = FixedReal::mul(result, square, result_scale);
        exp >>= 1;
        if (exp != 0) square = FixedReal::mul(square, square, result_scale);
    }
    return result;
}

/// sqrt rounded down to result_scale (at most one ulp low).
inline FixedReal fixed_sqrt(const FixedReal& v, unsigned result_scale) {
    if (v.is_negative()) throw std::domain_error("fixed_sqrt: negative input");
    const std::int64_t shift = 2 * static_cast<std::int64_t>(result_scale) -
                               static_cast<std::int64_t>(v.scale_bits());
    const BigInt radicand = shift >= 0 ? BigInt(v.mantissa() << static_cast<unsigned>(shift))
                                       : floor_shr(v.mantissa(), static_cast<unsigned>(-shift));
    return FixedReal::from_mantissa(sqrt(radicand), result_scale);
}

namespace detail {

inline void require_even_zeta_index(std::int64_t two_k, const char* what) {
    if (two_k < 2 || (two_k & 1))
        throw std::domain_error(std::string(what) + ": index must be even and >= 2");
}

// Smallest N with N^(2k-1) * (2k-1) >= 2^bits, i.e. the truncation point at
// which the tail bound drops below 2^(-bits); nullopt when it exceeds limit.
inline std::optional<std::uint64_t> direct_term_count(std::int64_t two_k, unsigned bits,
                                                      std::uint64_t limit) {
    const unsigned e = static_cast<unsigned>(two_k - 1);
    const BigInt budget = pow2(bits);
    const auto enough = [&](std::uint64_t n) { return pow(BigInt(n), e) * (two_k - 1) >= budget; };
    if (!enough(limit)) return std::nullopt;
    std::uint64_t lo = 1, hi = limit;  // enough(hi) holds; find the first such n
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (enough(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

// Plain term-by-term summation of sum n^(-2k) through term_count, at scale w.
inline FixedReal zeta_even_direct(std::int64_t two_k, unsigned w, std::uint64_t term_count) {
    const BigInt one = pow2(w);
    BigInt acc = one;  // n = 1
    for (std::uint64_t n = 2; n <= term_count; ++n) {
        const BigInt term = one / pow(BigInt(n), static_cast<unsigned>(two_k));
        if (term == 0) break;  // every later term is below one ulp
        acc += term;
    }
    return FixedReal::from_mantissa(acc, w);
}

// P. Borwein's accelerated alternating sum:
//   zeta(s) = 1/(d_n (1 - 2^(1-s))) * sum_{k=0}^{n-1} (-1)^k (d_n - d_k)/(k+1)^s
//             + error, |error| <= 3 / ((3+sqrt(8))^n (1 - 2^(1-s))),
// with d_k = n * sum_{i=0}^{k} (n+i-1)! 4^i / ((n-i)! (2i)!).
inline FixedReal zeta_even_alternating(std::int64_t two_k, unsigned w) {
    // (3+sqrt(8))^-n < 2^(-2.543n); pick n so the error bound sits below 2^(-w-4).
    const std::uint64_t n = (static_cast<std::uint64_t>(w) + 8) * 10000 / 25431 + 2;
    std::vector<Rational> d;
    d.reserve(n + 1);
    Rational u(1);  // n * (n+i-1)! 4^i / ((n-i)! (2i)!), starting at i = 0
    Rational run = u;
    d.push_back(run);
    for (std::uint64_t i = 1; i <= n; ++i) {
        u *= Rational(BigInt(4) * (n + i - 1) * (n - i + 1), BigInt(2 * i) * (2 * i - 1));
        run += u;
        d.push_back(run);
    }
    const Rational& d_n = d.back();
    BigInt acc(0);  // sum at scale w, one rounding per term
    for (std::uint64_t k = 0; k + 1 <= n; ++k) {
        const Rational term = (d_n - d[k]) / Rational(pow(BigInt(k + 1), static_cast<unsigned>(two_k)));
        const BigInt scaled = div_round_half_even(term.numerator() << w, term.denominator());
        if (k & 1)
            acc -= scaled;
        else
            acc += scaled;
    }
    // divide by d_n (1 - 2^(1-s)) = d_n (2^(s-1) - 1) / 2^(s-1), exactly expressed
    const BigInt p = pow2(static_cast<unsigned>(two_k - 1));
    const Rational divisor = d_n * Rational(p - 1, p);
    return FixedReal::from_mantissa(acc, w).mul_rational(divisor.reciprocal());
}

// Direct summation is worth it only while the truncation point is modest.
constexpr std::uint64_t kDirectTermLimit = 200000;

}  // namespace detail

/// zeta(2k) with |error| <= 2^(-scale_bits+2).
inline FixedReal zeta_even(std::int64_t two_k, unsigned scale_bits) {
    detail::require_even_zeta_index(two_k, "zeta_even");
    const unsigned w = scale_bits + 32;
    const auto terms = detail::direct_term_count(two_k, w + 2, detail::kDirectTermLimit);
    const FixedReal z = terms ? detail::zeta_even_direct(two_k, w, *terms)
                              : detail::zeta_even_alternating(two_k, w);
    return z.rescaled(scale_bits);
}

/// Asymptotic size estimate (-1)^(k-1) * 4 * (k/(pi*e))^(2k) * sqrt(pi*k),
/// evaluated at a fixed internal scale of 64 bits.  Underestimates |B_2k|
/// slightly; the relative error tends to 0 as 2k grows.
inline FixedReal bernoulli_estimate(std::int64_t two_k) {
    detail::require_even_zeta_index(two_k, "bernoulli_estimate");
    constexpr unsigned w = 64;
    const std::int64_t k = two_k / 2;
    const FixedReal pi = pi_fixed(w + 8);
    const FixedReal base = FixedReal::div(FixedReal(BigInt(k)), pi * e_fixed(w + 8), w);
    const FixedReal power = fixed_pow(base, static_cast<std::uint64_t>(two_k), w);
    const FixedReal root = fixed_sqrt(pi * BigInt(k), w);
    const FixedReal magnitude = FixedReal::mul(power, root, w) * BigInt(4);
    return (k % 2 == 0) ? -magnitude : magnitude;
}

namespace detail {

// floor(log10 x) for exact rational x > 0.
inline std::int64_t floor_log10(const Rational& x) {
    if (x.sign() <= 0) throw std::domain_error("floor_log10: input must be positive");
    if (x >= Rational(1))
        return static_cast<std::int64_t>(decimal_digit_count(x.floor())) - 1;
    // 0 < x < 1: smallest t >= 1 with x * 10^t >= 1 gives floor = -t
    std::int64_t t = static_cast<std::int64_t>(decimal_digit_count(x.denominator())) -
                     static_cast<std::int64_t>(decimal_digit_count(x.numerator())) - 1;
    if (t < 1) t = 1;
    Rational scaled = x * Rational(pow(BigInt(10), static_cast<unsigned>(t)));
    while (scaled < Rational(1)) {
        scaled *= Rational(10);
        ++t;
    }
    return -t;
}

// ceil(log10 x): floor plus one unless x is an exact power of ten.
inline std::int64_t ceil_log10(const Rational& x) {
    const std::int64_t f = floor_log10(x);
    const Rational power = f >= 0 ? Rational(pow(BigInt(10), static_cast<unsigned>(f)))
                                  : Rational(BigInt(1), pow(BigInt(10), static_cast<unsigned>(-f)));
    return x == power ? f : f + 1;
}

}  // namespace detail

/// Precision budget for the direct computation of B_2k: enough decimal
/// digits for the estimated magnitude plus the exact denominator, one digit
/// of slack, and 32 guard bits.  The reconstruction margin check downstream
/// turns an insufficient plan into an error rather than a wrong answer.
inline PrecisionPlan plan_precision(std::int64_t two_k) {
    detail::require_even_zeta_index(two_k, "plan_precision");
    const Rational magnitude = bernoulli_estimate(two_k).abs().to_rational();
    std::int64_t digits = detail::ceil_log10(magnitude) +
                          detail::ceil_log10(Rational(sc_denominator(two_k))) + 1;
    if (digits < 1) digits = 1;
    PrecisionPlan plan;
    plan.two_k = two_k;
    plan.estimated_decimal_digits = digits;
    plan.guard_bits = 32;
    // 33220/10000 is just above log2(10), so the bit budget covers the digits
    plan.working_scale_bits =
        static_cast<unsigned>((digits * 33220 + 9999) / 10000) + plan.guard_bits;
    return plan;
}

/// Exact B_2k directly from the zeta relation, without computing any other
/// Bernoulli number.  Distinct indices are independent; calls are pure.
/// Throws reconstruction_error if the margin check fails (raise guard bits
/// and retry is the caller's recourse).
inline Rational bernoulli_zeta(std::int64_t two_k) {
    detail::require_even_zeta_index(two_k, "bernoulli_zeta");
    const PrecisionPlan plan = plan_precision(two_k);
    const unsigned w = plan.working_scale_bits;
    const FixedReal z = zeta_even(two_k, w);
    const FixedReal two_pi_pow =
        fixed_pow(pi_fixed(w + 8) * BigInt(2), static_cast<std::uint64_t>(two_k), w + 8);
    const FixedReal numerator = z * (2 * factorial(static_cast<std::uint64_t>(two_k)));
    FixedReal approx = FixedReal::div(numerator, two_pi_pow, w);
    if ((two_k / 2) % 2 == 0) approx = -approx;  // sign (-1)^(k-1)
    return reconstruct_from_approx(two_k, approx);
}

}  // namespace bernoulli
