#pragma once

// Umbrella header: exact Bernoulli numbers, Faulhaber power sums,
// Clausen-von Staudt reconstruction, Bernoulli-driven series expansions,
// high-precision zeta machinery, and the irregular-prime scan.

#include "bernoulli/integer.hpp"
#include "bernoulli/rational.hpp"
#include "bernoulli/fixed_real.hpp"
#include "bernoulli/bernoulli_number.hpp"
#include "bernoulli/staudt_clausen.hpp"
#include "bernoulli/faulhaber.hpp"
#include "bernoulli/zeta.hpp"
#include "bernoulli/series_expansion.hpp"
#include "bernoulli/irregular_primes.hpp"
