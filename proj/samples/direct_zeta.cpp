// Compute one large Bernoulli number directly from the zeta relation --
// no predecessors needed -- and cross-check it against the recurrence.

#include "bernoulli/bernoulli.hpp"

#include <iostream>

int main() {
    const std::int64_t index = 100;

    const auto plan = bernoulli::plan_precision(index);
    std::cout << "index " << index << ": planning " << plan.estimated_decimal_digits
              << " decimal digits (" << plan.working_scale_bits << " working bits, "
              << plan.guard_bits << " guard)\n";

    const auto direct = bernoulli::bernoulli_zeta(index);
    std::cout << "zeta route:  B_" << index << " = " << direct << "\n";
    std::cout << "denominator " << bernoulli::sc_denominator(index) << ", fractional part "
              << bernoulli::sc_fractional_part(index) << "\n";

    const auto reference = bernoulli::bernoulli_recurrence(index);
    std::cout << (direct == reference ? "recurrence agrees" : "RECURRENCE MISMATCH") << "\n";
    return direct == reference ? 0 : 1;
}
