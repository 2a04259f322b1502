#include "bernoulli/irregular_primes.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "bernoulli/bernoulli_number.hpp"
#include "bernoulli/staudt_clausen.hpp"

using bernoulli::BigInt;
using bernoulli::IrregularPair;

TEST_CASE("numerator residues", "[irregular]") {
    CHECK(bernoulli::numerator_mod_p(32, BigInt(37)) == 0);
    CHECK(bernoulli::numerator_mod_p(62, BigInt(157)) == 0);
    CHECK(bernoulli::numerator_mod_p(110, BigInt(157)) == 0);
    CHECK(bernoulli::numerator_mod_p(2, BigInt(5)) == 1);  // numerator of 1/6 is 1

    CHECK_THROWS_AS(bernoulli::numerator_mod_p(36, BigInt(37)), std::domain_error);  // > p-3
    CHECK_THROWS_AS(bernoulli::numerator_mod_p(0, BigInt(37)), std::domain_error);
    CHECK_THROWS_AS(bernoulli::numerator_mod_p(7, BigInt(37)), std::domain_error);   // odd
    CHECK_THROWS_AS(bernoulli::numerator_mod_p(2, BigInt(35)), std::domain_error);   // composite
    CHECK_THROWS_AS(bernoulli::numerator_mod_p(2, BigInt(4)), std::domain_error);
}

TEST_CASE("regularity verdicts", "[irregular]") {
    CHECK(bernoulli::is_regular(BigInt(31)).regular);
    CHECK(bernoulli::is_regular(BigInt(5)).regular);

    const auto at37 = bernoulli::is_regular(BigInt(37));
    CHECK_FALSE(at37.regular);
    CHECK(at37.offending_indices == std::vector<std::int64_t>{32});

    const auto at157 = bernoulli::is_regular(BigInt(157));
    CHECK_FALSE(at157.regular);
    CHECK(at157.offending_indices == std::vector<std::int64_t>{62, 110});

    CHECK_THROWS_AS(bernoulli::is_regular(BigInt(3)), std::domain_error);
    CHECK_THROWS_AS(bernoulli::is_regular(BigInt(33)), std::domain_error);
}

TEST_CASE("scan up to 120", "[irregular]") {
    const auto pairs = bernoulli::irregular_primes_up_to(120);
    std::set<BigInt> primes;
    for (const auto& pair : pairs) primes.insert(pair.p);
    CHECK(primes == std::set<BigInt>{37, 59, 67, 101, 103});

    // ordering is by (p, index)
    for (std::size_t i = 1; i < pairs.size(); ++i) {
        const bool ordered = pairs[i - 1].p < pairs[i].p ||
                             (pairs[i - 1].p == pairs[i].p &&
                              pairs[i - 1].index < pairs[i].index);
        CHECK(ordered);
    }

    CHECK(bernoulli::irregular_primes_up_to(31).empty());
    CHECK(bernoulli::irregular_primes_up_to(4).empty());
    CHECK(bernoulli::irregular_primes_up_to(0).empty());
}

TEST_CASE("emitted pairs divide exactly, omitted ones do not", "[irregular][property]") {
    const std::int64_t limit = 100;
    const auto pairs = bernoulli::irregular_primes_up_to(limit);
    const auto table = bernoulli::bernoulli_table(limit - 3);

    std::set<std::pair<std::string, std::int64_t>> emitted;
    for (const auto& pair : pairs) {
        CAPTURE(pair.p.str(), pair.index);
        CHECK(table[pair.index].numerator() % pair.p == 0);
        CHECK(pair.index >= 2);
        CHECK(BigInt(pair.index) <= pair.p - 3);
        emitted.insert({pair.p.str(), pair.index});
    }
    for (std::uint64_t p : bernoulli::primes_up_to(limit)) {
        if (p < 5) continue;
        for (std::int64_t two_k = 2; two_k <= static_cast<std::int64_t>(p) - 3; two_k += 2) {
            if (emitted.count({BigInt(p).str(), two_k})) continue;
            CAPTURE(p, two_k);
            CHECK(table[two_k].numerator() % BigInt(p) != 0);
        }
    }
}

TEST_CASE("residues exist because p never divides the denominator", "[irregular][property]") {
    for (std::uint64_t p : bernoulli::primes_up_to(60)) {
        if (p < 5) continue;
        for (std::int64_t two_k = 2; two_k <= static_cast<std::int64_t>(p) - 3; two_k += 2) {
            CAPTURE(p, two_k);
            CHECK(bernoulli::sc_denominator(two_k) % BigInt(p) != 0);
        }
    }
}
