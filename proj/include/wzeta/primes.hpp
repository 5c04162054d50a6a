// Small-prime utilities (sieve range, long-sized inputs).
#pragma once

#include <vector>

#include "wzeta/rational.hpp"

namespace wzeta {

// All primes <= limit, ascending.  limit < 2 gives an empty list.
std::vector<long> primes_up_to(long limit);

// Trial-division primality for long-sized n.
bool is_prime(long n);

// Prime factorisation of n >= 1 as (prime, exponent) pairs, ascending primes.
std::vector<std::pair<long, long>> factorize(long n);

} // namespace wzeta
