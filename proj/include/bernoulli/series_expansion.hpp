#pragma once

// Exact Taylor (and Laurent) coefficients, all driven by Bernoulli numbers,
// for the classical expansions
//
//   x/(e^x - 1)         = sum B_n x^n / n!
//   (x/2) coth(x/2)     = sum B_2n x^2n / (2n)!
//   coth(x) = sum 2 B_2n (2x)^(2n-1) / (2n)!                    |x| < pi
//   cot(x)  = sum (-1)^n 2 B_2n (2x)^(2n-1) / (2n)!             |x| < pi
//   tanh(x) = sum 2 (4^n - 1) B_2n (2x)^(2n-1) / (2n)!          |x| < pi/2
//   tan(x)  = sum (-1)^n 2 (1 - 4^n) B_2n (2x)^(2n-1) / (2n)!   |x| < pi/2
//
// Coefficients are returned per power of x, with every power of two from
// the (2x) factors folded in: one normal form, directly comparable against
// series-division oracles.  coth and cot expose their Laurent 1/x term as
// m = -1.

#include "bernoulli/bernoulli_number.hpp"
#include "bernoulli/fixed_real.hpp"
#include "bernoulli/rational.hpp"
#include "bernoulli/zeta.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bernoulli {

enum class FunctionTag { exp_gen, x_coth_half, coth, cot, tanh, tan };

inline const char* to_string(FunctionTag tag) {
    switch (tag) {
        case FunctionTag::exp_gen: return "exp_gen";
        case FunctionTag::x_coth_half: return "x_coth_half";
        case FunctionTag::coth: return "coth";
        case FunctionTag::cot: return "cot";
        case FunctionTag::tanh: return "tanh";
        case FunctionTag::tan: return "tan";
    }
    throw std::domain_error("to_string: unknown FunctionTag");
}

inline FunctionTag parse_function_tag(const std::string& name) {
    if (name == "exp_gen") return FunctionTag::exp_gen;
    if (name == "x_coth_half") return FunctionTag::x_coth_half;
    if (name == "coth") return FunctionTag::coth;
    if (name == "cot") return FunctionTag::cot;
    if (name == "tanh") return FunctionTag::tanh;
    if (name == "tan") return FunctionTag::tan;
    throw std::domain_error("unknown function tag \"" + name + "\"");
}

namespace detail {

// Shared shape of the four cotangent-family expansions: coefficient of
// x^(2n-1) is factor(n) * 4^n * B_2n / (2n)!.
inline Rational odd_coeff(std::int64_t m, const Rational& factor) {
    const std::int64_t n = (m + 1) / 2;
    const Rational b = bernoulli_recurrence(2 * n);
    if (b.is_zero()) return Rational();
    return factor * b * Rational(pow(BigInt(4), static_cast<unsigned>(n)),
                                 factorial(static_cast<std::uint64_t>(2 * n)));
}

}  // namespace detail

/// Exact coefficient of x^m in the tagged expansion.  Domains: m >= 0 for
/// exp_gen and x_coth_half, m >= -1 for coth and cot (m = -1 is the Laurent
/// leading term), m >= 1 for tanh and tan.
inline Rational expansion_coeff(FunctionTag tag, std::int64_t m) {
    switch (tag) {
        case FunctionTag::exp_gen:
            if (m < 0) throw std::domain_error("expansion_coeff: exp_gen needs m >= 0");
            return bernoulli_recurrence(m) / Rational(factorial(static_cast<std::uint64_t>(m)));
        case FunctionTag::x_coth_half:
            if (m < 0) throw std::domain_error("expansion_coeff: x_coth_half needs m >= 0");
            if (m & 1) return Rational();
            return bernoulli_recurrence(m) / Rational(factorial(static_cast<std::uint64_t>(m)));
        case FunctionTag::coth:
            if (m < -1) throw std::domain_error("expansion_coeff: coth needs m >= -1");
            if (!(m & 1)) return Rational();
            return detail::odd_coeff(m, Rational(1));
        case FunctionTag::cot:
            if (m < -1) throw std::domain_error("expansion_coeff: cot needs m >= -1");
            if (!(m & 1)) return Rational();
            return detail::odd_coeff(m, ((m + 1) / 2) % 2 ? Rational(-1) : Rational(1));
        case FunctionTag::tanh: {
            if (m < 1) throw std::domain_error("expansion_coeff: tanh needs m >= 1");
            if (!(m & 1)) return Rational();
            const std::int64_t n = (m + 1) / 2;
            const Rational four_n(pow(BigInt(4), static_cast<unsigned>(n)));
            return detail::odd_coeff(m, four_n - Rational(1));
        }
        case FunctionTag::tan: {
            if (m < 1) throw std::domain_error("expansion_coeff: tan needs m >= 1");
            if (!(m & 1)) return Rational();
            const std::int64_t n = (m + 1) / 2;
            const Rational sign = n % 2 ? Rational(-1) : Rational(1);
            const Rational four_n(pow(BigInt(4), static_cast<unsigned>(n)));
            return detail::odd_coeff(m, sign * (Rational(1) - four_n));
        }
    }
    throw std::domain_error("expansion_coeff: unknown FunctionTag");
}

namespace detail {

// Convergence domain of the tagged series, as a multiple of pi/2.
inline int domain_half_pis(FunctionTag tag) {
    switch (tag) {
        case FunctionTag::exp_gen: return 4;  // |x| < 2*pi
        case FunctionTag::x_coth_half:
        case FunctionTag::coth:
        case FunctionTag::cot: return 2;  // |x| < pi
        case FunctionTag::tanh:
        case FunctionTag::tan: return 1;  // |x| < pi/2
    }
    throw std::domain_error("domain_half_pis: unknown FunctionTag");
}

}  // namespace detail

/// Partial sum of the tagged expansion through x^order, at x's scale.
/// x must lie strictly inside the series' convergence domain; coth and cot
/// additionally reject x = 0 (the 1/x pole).
inline FixedReal evaluate_truncated(FunctionTag tag, const FixedReal& x, std::int64_t order) {
    if (order < 1) throw std::domain_error("evaluate_truncated: order must be >= 1");
    const bool laurent = tag == FunctionTag::coth || tag == FunctionTag::cot;
    if (laurent && x.is_zero())
        throw std::domain_error("evaluate_truncated: pole at x = 0");
    const unsigned w = x.scale_bits() + 32;
    const FixedReal half_pi = pi_fixed(w) / BigInt(2);
    if (!(x.abs() < half_pi * BigInt(detail::domain_half_pis(tag))))
        throw std::domain_error("evaluate_truncated: x outside the convergence domain");

    const FixedReal xw = x.rescaled(w);
    const std::int64_t m_min = laurent ? -1 : 0;
    FixedReal power = laurent ? FixedReal::div(FixedReal(BigInt(1)), xw, w)
                              : FixedReal(BigInt(1)).rescaled(w);
    FixedReal sum = FixedReal(BigInt(0)).rescaled(w);
    const bool odd_only = tag == FunctionTag::tanh || tag == FunctionTag::tan;
    for (std::int64_t m = m_min; m <= order; ++m) {
        if (!(odd_only && !(m & 1))) {
            const Rational c = expansion_coeff(tag, m);
            if (!c.is_zero()) sum = sum + power.mul_rational(c);
        }
        power = FixedReal::mul(power, xw, w);
    }
    return sum.rescaled(x.scale_bits());
}

}  // namespace bernoulli
