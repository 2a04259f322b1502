// Acceptance suite: one pass/fail line per criterion, exact tolerances
// pinned in code.  Exits nonzero if any criterion fails.

#include "bernoulli/bernoulli.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "known_values.hpp"
#include "oracles.hpp"

namespace {

using bernoulli::BigInt;
using bernoulli::FixedReal;
using bernoulli::Rational;

int g_failures = 0;

void run_criterion(int number, const std::string& name, double budget_seconds,
                   const std::function<bool(std::string&)>& body) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && budget_seconds > 0 && elapsed > budget_seconds) {
        ok = false;
        detail = "over time budget";
    }
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << name << "  ["
         << elapsed << "s";
    if (budget_seconds > 0) line << " / " << budget_seconds << "s budget";
    line << "]";
    if (!ok && !detail.empty()) line << "  -- " << detail;
    std::cout << line.str() << std::endl;
    if (!ok) ++g_failures;
}

Rational pow2_inv(unsigned k) { return Rational(BigInt(1), bernoulli::pow2(k)); }

bool classical_table_reproduction(std::string& detail) {
    const auto expected = known::bernoulli_b0_to_b40();
    const auto table = bernoulli::bernoulli_table(40);
    for (std::int64_t n = 0; n <= 40; ++n)
        if (table[n] != expected[static_cast<std::size_t>(n)]) {
            detail = "mismatch at n=" + std::to_string(n);
            return false;
        }
    return true;
}

bool triple_method_agreement(std::string& detail) {
    const auto table = bernoulli::bernoulli_table(120);
    for (std::int64_t n = 0; n <= 60; ++n)
        if (bernoulli::bernoulli_double_sum(n) != table[n]) {
            detail = "double sum disagrees at n=" + std::to_string(n);
            return false;
        }
    for (std::int64_t n = 2; n <= 120; n += 2)
        if (bernoulli::bernoulli_zeta(n) != table[n]) {
            detail = "zeta method disagrees at n=" + std::to_string(n);
            return false;
        }
    return true;
}

bool tenth_powers_anecdote(std::string& detail) {
    const BigInt total = bernoulli::power_sum_inclusive(BigInt(1000), 10);
    if (total != known::ten_thousand_powers_total()) {
        detail = "got " + total.str();
        return false;
    }
    return true;
}

bool staudt_clausen_exactness(std::string& detail) {
    const auto table = bernoulli::bernoulli_table(60);
    for (std::int64_t two_k = 2; two_k <= 60; two_k += 2) {
        if (bernoulli::sc_denominator(two_k) != table[two_k].denominator()) {
            detail = "denominator mismatch at 2k=" + std::to_string(two_k);
            return false;
        }
        if (bernoulli::sc_fractional_part(two_k) != table[two_k].frac_mod1()) {
            detail = "fractional part mismatch at 2k=" + std::to_string(two_k);
            return false;
        }
    }
    if (bernoulli::sc_fractional_part(16) != Rational(BigInt(463), BigInt(510))) {
        detail = "frac(B_16) != 463/510";
        return false;
    }
    for (std::int64_t two_k : {14, 26, 38, 62, 74})
        if (bernoulli::sc_fractional_part(two_k) != Rational(BigInt(1), BigInt(6))) {
            detail = "frac != 1/6 at 2k=" + std::to_string(two_k);
            return false;
        }
    return true;
}

bool irregular_scan(std::string& detail) {
    const auto pairs = bernoulli::irregular_primes_up_to(300);
    std::set<BigInt> primes;
    std::vector<std::int64_t> at37, at157;
    for (const auto& pair : pairs) {
        primes.insert(pair.p);
        if (pair.p == 37) at37.push_back(pair.index);
        if (pair.p == 157) at157.push_back(pair.index);
    }
    const std::set<BigInt> expected{37,  59,  67,  101, 103, 131, 149,
                                    157, 233, 257, 263, 271, 283, 293};
    if (primes != expected) {
        detail = "prime set has " + std::to_string(primes.size()) + " members";
        return false;
    }
    if (at37 != std::vector<std::int64_t>{32}) {
        detail = "indices of 37 wrong";
        return false;
    }
    if (at157 != std::vector<std::int64_t>{62, 110}) {
        detail = "indices of 157 wrong";
        return false;
    }
    return true;
}

bool zeta_relation_closure(std::string& detail) {
    const auto table = bernoulli::bernoulli_table(40);
    const FixedReal pi = bernoulli::pi_fixed(192);
    for (std::int64_t two_k = 2; two_k <= 40; two_k += 2) {
        const FixedReal b = bernoulli::fixed_from_rational(table[two_k].abs(), 128);
        const FixedReal pi_pow = bernoulli::fixed_pow(pi, static_cast<std::uint64_t>(two_k), 192);
        const FixedReal lhs =
            (FixedReal::mul(b, pi_pow, 192) *
             bernoulli::pow(BigInt(4), static_cast<unsigned>(two_k / 2))) /
            (2 * bernoulli::factorial(static_cast<std::uint64_t>(two_k)));
        const FixedReal rhs = bernoulli::zeta_even(two_k, 128);
        if ((lhs.to_rational() - rhs.to_rational()).abs() > pow2_inv(120)) {
            detail = "gap above 2^-120 at 2k=" + std::to_string(two_k);
            return false;
        }
    }
    return true;
}

bool asymptotic_estimate_quality(std::string& detail) {
    const auto table = bernoulli::bernoulli_table(40);
    const auto relative_error = [&table](std::int64_t two_k) {
        const Rational exact = table[two_k].abs();
        const Rational est = bernoulli::bernoulli_estimate(two_k).abs().to_rational();
        return ((est - exact) / exact).abs();
    };
    if (relative_error(20) >= Rational(BigInt(1), BigInt(20))) {
        detail = "relative error at 2k=20 is not below 5%";
        return false;
    }
    if (relative_error(40) >= Rational(BigInt(1), BigInt(200))) {
        detail = "relative error at 2k=40 is not below 0.5%";
        return false;
    }
    return true;
}

bool series_suite(std::string& detail) {
    using bernoulli::FunctionTag;
    using bernoulli::expansion_coeff;
    const std::vector<std::pair<std::int64_t, Rational>> tan_values{
        {1, Rational(1)},
        {3, Rational(BigInt(1), BigInt(3))},
        {5, Rational(BigInt(2), BigInt(15))},
        {7, Rational(BigInt(17), BigInt(315))}};
    for (const auto& [order, value] : tan_values)
        if (expansion_coeff(FunctionTag::tan, order) != value) {
            detail = "tan coefficient wrong at order " + std::to_string(order);
            return false;
        }
    for (std::int64_t n = 0; n <= 40; ++n)
        if (expansion_coeff(FunctionTag::exp_gen, n) *
                Rational(bernoulli::factorial(static_cast<std::uint64_t>(n))) !=
            bernoulli::bernoulli_recurrence(n)) {
            detail = "generating coefficient wrong at n=" + std::to_string(n);
            return false;
        }
    // 2 coth(2x) - coth(x) = tanh(x), coefficient by coefficient
    for (std::int64_t m = -1; m <= 21; ++m) {
        const Rational coth_m = expansion_coeff(FunctionTag::coth, m);
        const Rational scale = m >= 0 ? Rational(bernoulli::pow2(static_cast<unsigned>(m)))
                                      : Rational(BigInt(1), BigInt(2));
        const Rational lhs = Rational(2) * coth_m * scale - coth_m;
        const Rational rhs = m >= 1 ? expansion_coeff(FunctionTag::tanh, m) : Rational();
        if (lhs != rhs) {
            detail = "tanh derivation identity fails at m=" + std::to_string(m);
            return false;
        }
    }
    // Cauchy product of x/(e^x-1) with (e^x-1)/x is 1
    for (std::int64_t m = 0; m <= 20; ++m) {
        Rational conv;
        for (std::int64_t j = 0; j <= m; ++j)
            conv += expansion_coeff(FunctionTag::exp_gen, j) *
                    Rational(BigInt(1),
                             bernoulli::factorial(static_cast<std::uint64_t>(m - j + 1)));
        if (conv != (m == 0 ? Rational(1) : Rational())) {
            detail = "Cauchy product fails at m=" + std::to_string(m);
            return false;
        }
    }
    return true;
}

bool property_suites(std::string& detail) {
    // Faulhaber brute-force equivalence, n <= 200, r <= 12
    for (std::uint64_t n = 0; n <= 200; ++n)
        for (std::uint64_t r = 0; r <= 12; ++r)
            if (bernoulli::power_sum_exclusive(BigInt(n), static_cast<std::int64_t>(r)) !=
                oracle::power_sum_loop_exclusive(n, r)) {
                detail = "power sum differs from the loop at n=" + std::to_string(n) +
                         " r=" + std::to_string(r);
                return false;
            }
    // telescoping
    for (std::int64_t r = 0; r <= 12; ++r)
        for (std::int64_t n = 1; n <= 100; ++n)
            if (bernoulli::power_sum_exclusive(BigInt(n + 1), r) -
                    bernoulli::power_sum_exclusive(BigInt(n), r) !=
                bernoulli::pow(BigInt(n), static_cast<unsigned>(r))) {
                detail = "telescoping fails at n=" + std::to_string(n);
                return false;
            }
    // Pascal property on random draws
    std::mt19937 rng(20240814);
    for (int trial = 0; trial < 500; ++trial) {
        const std::uint64_t n = 1 + rng() % 60;
        const std::uint64_t k = rng() % (n + 1);
        const BigInt lhs = bernoulli::binomial(n, k);
        const BigInt rhs = (k == 0 ? BigInt(1) : bernoulli::binomial(n - 1, k - 1) +
                                                     bernoulli::binomial(n - 1, k));
        if (lhs != rhs) {
            detail = "Pascal fails at n=" + std::to_string(n) + " k=" + std::to_string(k);
            return false;
        }
    }
    // both index-6k identities, n <= 20
    for (std::int64_t n = 0; n <= 20; ++n) {
        const auto [first, second] = bernoulli::check_identity_6k(n);
        if (first != Rational(BigInt(2 * n + 1)) ||
            second != Rational(BigInt(6 * n + 5), BigInt(3))) {
            detail = "6k identity fails at n=" + std::to_string(n);
            return false;
        }
    }
    // FixedReal error bounds on random unit-range values
    for (int trial = 0; trial < 500; ++trial) {
        const int den = 1 + static_cast<int>(rng() % 999);
        const int num_a = static_cast<int>(rng() % (2 * den + 1)) - den;
        const int num_b = static_cast<int>(rng() % (2 * den + 1)) - den;
        const Rational a = Rational(BigInt(num_a), BigInt(den));
        const Rational b = Rational(BigInt(num_b), BigInt(den));
        const unsigned s = 48;
        const FixedReal fa = bernoulli::fixed_from_rational(a, s);
        const FixedReal fb = bernoulli::fixed_from_rational(b, s);
        const Rational bound = Rational(2) * pow2_inv(s);
        if (((fa + fb).to_rational() - (a + b)).abs() > bound ||
            ((fa * fb).to_rational() - (a * b)).abs() > bound) {
            detail = "fixed-point error bound exceeded";
            return false;
        }
    }
    // reconstruction round-trips
    const auto table = bernoulli::bernoulli_table(60);
    for (std::int64_t two_k = 2; two_k <= 60; two_k += 2) {
        const FixedReal approx = bernoulli::fixed_from_rational(table[two_k], 128);
        if (bernoulli::reconstruct_from_approx(two_k, approx) != table[two_k]) {
            detail = "round-trip fails at 2k=" + std::to_string(two_k);
            return false;
        }
    }
    return true;
}

bool direct_method_at_2000(std::string& detail) {
    const auto plan = bernoulli::plan_precision(2000);
    const Rational b = bernoulli::bernoulli_zeta(2000);
    if (b.frac_mod1() != bernoulli::sc_fractional_part(2000)) {
        detail = "fractional part mismatch";
        return false;
    }
    const auto digits =
        static_cast<std::int64_t>(bernoulli::decimal_digit_count(b.numerator()));
    if (plan.estimated_decimal_digits < digits - 2 ||
        plan.estimated_decimal_digits > digits + 2) {
        detail = "plan " + std::to_string(plan.estimated_decimal_digits) + " digits vs actual " +
                 std::to_string(digits);
        return false;
    }
    return true;
}

}  // namespace

int main() {
    run_criterion(1, "classical table B_0..B_40 reproduced exactly", 1.0,
                  classical_table_reproduction);
    run_criterion(2, "recurrence = double sum (n<=60), recurrence = zeta method (n<=120)", 60.0,
                  triple_method_agreement);
    run_criterion(3, "inclusive power sum (1000, 10)", 0.1, tenth_powers_anecdote);
    run_criterion(4, "Staudt-Clausen denominators and fractional parts", 0.0,
                  staudt_clausen_exactness);
    run_criterion(5, "irregular primes up to 300", 300.0, irregular_scan);
    run_criterion(6, "zeta relation closure to 2^-120 at 128 bits", 0.0, zeta_relation_closure);
    run_criterion(7, "asymptotic estimate below 5% at 20 and 0.5% at 40", 0.0,
                  asymptotic_estimate_quality);
    run_criterion(8, "series suite (tan, generating identity, tanh, Cauchy product)", 0.0,
                  series_suite);
    run_criterion(9, "module property suites", 0.0, property_suites);
    run_criterion(10, "direct zeta-method computation of B_2000", 600.0, direct_method_at_2000);

    if (g_failures == 0) {
        std::cout << "all 10 acceptance criteria passed" << std::endl;
        return 0;
    }
    std::cout << g_failures << " acceptance criterion(s) failed" << std::endl;
    return 1;
}
