#pragma once

// Exact power-sum polynomials:
//
//   sum_{k=1}^{n-1} k^r  =  sum_{k=0}^{r} B_k/k! * r!/(r-k+1)! * n^(r-k+1)
//
// The polynomial has no constant term, leading coefficient 1/(r+1), and
// degree-r coefficient B_1 = -1/2.  The right-hand side actually counts the
// k = 0 term with 0^0 = 1, so at r = 0 the exclusive sum needs the lone
// correction -1; see power_sum_exclusive.
//
// Two explicit entry points keep the off-by-one conventions apart:
// power_sum_exclusive stops at n-1, power_sum_inclusive at n.

#include "bernoulli/bernoulli_number.hpp"
#include "bernoulli/integer.hpp"
#include "bernoulli/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bernoulli {

class PowerSumPoly {
  public:
    PowerSumPoly(std::int64_t exponent, std::vector<Rational> coeffs)
        : exponent_(exponent), coeffs_(std::move(coeffs)) {}

    std::int64_t exponent() const { return exponent_; }
    std::int64_t degree() const { return exponent_ + 1; }

    /// Coefficient of n^d, d = 1 .. r+1.  (No constant term by construction.)
    const Rational& coeff(std::int64_t d) const {
        return coeffs_.at(static_cast<std::size_t>(d - 1));
    }

    /// Exact evaluation at integer n, by Horner on n * (c_1 + n * (c_2 + ...)).
    Rational evaluate(const BigInt& n) const {
        Rational acc;
        for (std::size_t d = coeffs_.size(); d-- > 0;)
            acc = coeffs_[d] + acc * Rational(n);
        return acc * Rational(n);
    }

    /// Descending-degree "coeff·n^d" terms, zero coefficients skipped.
    std::string to_string() const {
        std::string out;
        for (std::int64_t d = degree(); d >= 1; --d) {
            const Rational& c = coeff(d);
            if (c.is_zero()) continue;
            if (out.empty())
                out += c.is_negative() ? "-" : "";
            else
                out += c.is_negative() ? " - " : " + ";
            out += c.abs().to_string() + "·n";
            if (d != 1) out += "^" + std::to_string(d);
        }
        return out.empty() ? "0" : out;
    }

  private:
    std::int64_t exponent_;
    std::vector<Rational> coeffs_;  // coeffs_[d-1] = coefficient of n^d
};

namespace detail {

inline PowerSumPoly make_power_sum_poly(std::int64_t r) {
    const BernoulliTable b = bernoulli_table(r);
    std::vector<Rational> coeffs(static_cast<std::size_t>(r) + 1);
    // coefficient of n^(r-k+1) is B_k/k! * r!/(r-k+1)!  ==  B_k * C(r+1,k) / (r+1)
    BigInt binom(1);  // C(r+1, k), updated incrementally
    const Rational inv_rp1(BigInt(1), BigInt(r + 1));
    for (std::int64_t k = 0; k <= r; ++k) {
        if (!b[k].is_zero())
            coeffs[static_cast<std::size_t>(r - k)] = b[k] * Rational(binom) * inv_rp1;
        binom = binom * (r + 1 - k) / (k + 1);
    }
    return PowerSumPoly(r, std::move(coeffs));
}

}  // namespace detail

/// Cached per exponent; the cache is write-once, so concurrent readers are
/// safe after first construction.
inline const PowerSumPoly& power_sum_poly(std::int64_t r) {
    if (r < 0) throw std::domain_error("power_sum_poly: negative exponent");
    static std::mutex mutex;
    static std::map<std::int64_t, std::unique_ptr<const PowerSumPoly>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[r];
    if (!slot) slot = std::make_unique<const PowerSumPoly>(detail::make_power_sum_poly(r));
    return *slot;
}

/// sum_{k=1}^{n-1} k^r, exact.  0 for n <= 1.
inline BigInt power_sum_exclusive(const BigInt& n, std::int64_t r) {
    if (r < 0) throw std::domain_error("power_sum_exclusive: negative exponent");
    if (n <= 1) return 0;
    Rational value = power_sum_poly(r).evaluate(n);
    if (r == 0) value -= Rational(1);  // drop the 0^0 = 1 term the polynomial counts
    if (!value.is_integer())
        throw std::logic_error("power_sum_exclusive: non-integral evaluation at r=" +
                               std::to_string(r));
    return value.numerator();
}

/// sum_{k=1}^{n} k^r, exact.
inline BigInt power_sum_inclusive(const BigInt& n, std::int64_t r) {
    return power_sum_exclusive(n + 1, r);
}

}  // namespace bernoulli
