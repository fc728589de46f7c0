#pragma once

#include <utility>
#include <vector>

#include "bianchi/rat.hpp"

namespace bianchi {

// Primality test (BPSW via mpz_probab_prime_p; exact for anything desk-sized).
bool is_prime(const Int& n);

// Prime factorization of n >= 1, primes strictly increasing.
// factor_integer(1) = {}.
std::vector<std::pair<Int, unsigned>> factor_integer(const Int& n);

// Factorization of a positive rational: prime -> exponent (negative exponents
// from the denominator). Used by the congruence reports.
std::vector<std::pair<Int, long>> factor_rational(const Rat& q);

// Render a factorization as "2^3 * 5 * 7^2"; "1" for the empty one.
std::string factorization_str(const std::vector<std::pair<Int, long>>& f);

}  // namespace bianchi
