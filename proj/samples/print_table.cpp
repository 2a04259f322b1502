// Print the first Bernoulli numbers, a few power-sum polynomials, and the
// classic thousand-tenth-powers total.

#include "bernoulli/bernoulli.hpp"

#include <iostream>

int main() {
    const auto table = bernoulli::bernoulli_table(30);
    for (std::int64_t n = 0; n <= 30; ++n)
        if (!table[n].is_zero() || n <= 2)
            std::cout << "B_" << n << " = " << table[n] << "\n";

    std::cout << "\npower-sum polynomials (sum of k^r for k = 1..n-1):\n";
    for (std::int64_t r = 1; r <= 5; ++r)
        std::cout << "r=" << r << ": " << bernoulli::power_sum_poly(r).to_string() << "\n";

    std::cout << "\n1^10 + 2^10 + ... + 1000^10 = "
              << bernoulli::power_sum_inclusive(bernoulli::BigInt(1000), 10) << "\n";
    return 0;
}
