#pragma once

// Exact Bernoulli numbers by two independent algorithms.
//
// Sign convention, inherited by the whole library: B_1 = -1/2.  It is the
// convention forced jointly by the generating identity x/(e^x - 1) and the
// classical value table, and both algorithms below produce it.
//
//   - bernoulli_recurrence / bernoulli_table: solve
//         sum_{k=0}^{n-1} C(n,k) B_k = 0        (n >= 2)
//     for the highest-index term, iterating up from B_0 = 1.  One
//     triangular pass tabulates everything up to a given index.
//   - bernoulli_double_sum: the closed double sum
//         B_n = sum_{k=0}^{n} 1/(k+1) * sum_{r=0}^{k} (-1)^r C(k,r) r^n
//     with the 0^0 = 1 convention.  O(n^2) large powers, kept as a
//     genuinely different derivation to check the recurrence against.

#include "bernoulli/integer.hpp"
#include "bernoulli/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bernoulli {

namespace detail {

inline void require_index(std::int64_t n, const char* what) {
    if (n < 0) throw std::domain_error(std::string(what) + ": negative index");
}

}  // namespace detail

/// B_0 .. B_max_index, built in one triangular pass of the recurrence.
class BernoulliTable {
  public:
    explicit BernoulliTable(std::vector<Rational> values) : values_(std::move(values)) {}

    std::int64_t max_index() const { return static_cast<std::int64_t>(values_.size()) - 1; }

    const Rational& operator[](std::int64_t n) const {
        return values_.at(static_cast<std::size_t>(n));
    }

    const std::vector<Rational>& values() const { return values_; }

  private:
    std::vector<Rational> values_;
};

inline BernoulliTable bernoulli_table(std::int64_t max_index) {
    detail::require_index(max_index, "bernoulli_table");
    std::vector<Rational> b;
    b.reserve(static_cast<std::size_t>(max_index) + 1);
    b.emplace_back(1);
    for (std::int64_t n = 1; n <= max_index; ++n) {
        // B_n = -1/(n+1) * sum_{k=0}^{n-1} C(n+1, k) B_k
        Rational sum;
        BigInt binom(1);  // C(n+1, k), updated incrementally
        for (std::int64_t k = 0; k < n; ++k) {
            if (!b[static_cast<std::size_t>(k)].is_zero())
                sum += b[static_cast<std::size_t>(k)] * Rational(binom);
            binom = binom * (n + 1 - k) / (k + 1);
        }
        b.push_back(-sum / Rational(BigInt(n + 1)));
    }
    return BernoulliTable(std::move(b));
}

/// B_n via the binomial recurrence.
inline Rational bernoulli_recurrence(std::int64_t n) {
    detail::require_index(n, "bernoulli_recurrence");
    return bernoulli_table(n)[n];
}

/// B_n via the double sum, 0^0 = 1.
inline Rational bernoulli_double_sum(std::int64_t n) {
    detail::require_index(n, "bernoulli_double_sum");
    const auto power = [n](std::int64_t r) -> BigInt {
        if (r == 0) return n == 0 ? 1 : 0;
        return pow(BigInt(r), static_cast<unsigned>(n));
    };
    Rational total;
    for (std::int64_t k = 0; k <= n; ++k) {
        BigInt inner(0);
        BigInt binom(1);  // C(k, r)
        for (std::int64_t r = 0; r <= k; ++r) {
            const BigInt term = binom * power(r);
            inner += (r & 1) ? -term : term;
            binom = binom * (k - r) / (r + 1);
        }
        total += Rational(inner, BigInt(k + 1));
    }
    return total;
}

/// Left-hand sides of the two index-6k binomial identities,
///   sum_{k=0}^{n} C(6n+3, 6k)   B_{6k},
///   sum_{k=0}^{n} C(6n+5, 6k+2) B_{6k+2},
/// whose values should be 2n+1 and (6n+5)/3.  The computed sums are
/// returned rather than a verdict so a mismatch is diagnosable.
inline std::pair<Rational, Rational> check_identity_6k(std::int64_t n) {
    detail::require_index(n, "check_identity_6k");
    const BernoulliTable table = bernoulli_table(6 * n + 2);
    Rational first, second;
    for (std::int64_t k = 0; k <= n; ++k) {
        first += table[6 * k] *
                 Rational(binomial(static_cast<std::uint64_t>(6 * n + 3),
                                   static_cast<std::uint64_t>(6 * k)));
        second += table[6 * k + 2] *
                  Rational(binomial(static_cast<std::uint64_t>(6 * n + 5),
                                    static_cast<std::uint64_t>(6 * k + 2)));
    }
    return {first, second};
}

}  // namespace bernoulli
