#pragma once

// Kummer's regularity criterion: an odd prime p >= 5 is regular iff p
// divides none of the numerators of B_2, B_4, ..., B_(p-3).  The index
// range guarantees (p-1) does not divide 2k, so by Clausen-von Staudt p
// never divides the denominator and the residue is well defined.
//
// The scan computes exact Bernoulli numbers once per run (a single table up
// to the largest index needed) and reduces numerators mod p.  Maximally
// trustworthy, and minutes of work at desk scale.

#include "bernoulli/bernoulli_number.hpp"
#include "bernoulli/integer.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace bernoulli {

/// A prime p together with one even index 2k <= p-3 whose Bernoulli
/// numerator p divides.
struct IrregularPair {
    BigInt p;
    std::int64_t index = 0;

    friend bool operator==(const IrregularPair& a, const IrregularPair& b) {
        return a.p == b.p && a.index == b.index;
    }
};

struct RegularityResult {
    bool regular = true;
    std::vector<std::int64_t> offending_indices;  // even 2k <= p-3 with p | numerator(B_2k)
};

namespace detail {

inline void require_odd_prime(const BigInt& p, const char* what) {
    if (!is_prime(p)) throw std::domain_error(std::string(what) + ": p must be prime");
    if (p < 5) throw std::domain_error(std::string(what) + ": p must be >= 5");
}

inline BigInt residue_mod(const BigInt& value, const BigInt& p) {
    BigInt r = value % p;
    if (r < 0) r += p;
    return r;
}

}  // namespace detail

/// numerator(B_2k) mod p, in [0, p), from the exact rational.
inline BigInt numerator_mod_p(std::int64_t two_k, const BigInt& p) {
    detail::require_odd_prime(p, "numerator_mod_p");
    if (two_k < 2 || (two_k & 1) || BigInt(two_k) > p - 3)
        throw std::domain_error("numerator_mod_p: index must be even in [2, p-3]");
    return detail::residue_mod(bernoulli_recurrence(two_k).numerator(), p);
}

/// Kummer criterion for a single prime: regular iff the offending-index
/// list comes back empty.
inline RegularityResult is_regular(const BigInt& p) {
    detail::require_odd_prime(p, "is_regular");
    if (p > (BigInt(1) << 31))
        throw std::domain_error("is_regular: p is beyond the exact-table range");
    const std::int64_t max_index = (p - 3).convert_to<std::int64_t>();
    const BernoulliTable table = bernoulli_table(max_index);
    RegularityResult result;
    for (std::int64_t two_k = 2; two_k <= max_index; two_k += 2)
        if (detail::residue_mod(table[two_k].numerator(), p) == 0)
            result.offending_indices.push_back(two_k);
    result.regular = result.offending_indices.empty();
    return result;
}

/// Every irregular pair with p <= limit, ordered by (p, index).  One shared
/// Bernoulli table serves the whole scan.
inline std::vector<IrregularPair> irregular_primes_up_to(std::int64_t limit) {
    std::vector<IrregularPair> pairs;
    if (limit < 5) return pairs;
    const auto primes = primes_up_to(static_cast<std::uint64_t>(limit));
    const BernoulliTable table = bernoulli_table(limit - 3);
    for (std::uint64_t p : primes) {
        if (p < 5) continue;
        const BigInt big_p(p);
        for (std::int64_t two_k = 2; two_k <= static_cast<std::int64_t>(p) - 3; two_k += 2)
            if (detail::residue_mod(table[two_k].numerator(), big_p) == 0)
                pairs.push_back({big_p, two_k});
    }
    return pairs;
}

}  // namespace bernoulli
