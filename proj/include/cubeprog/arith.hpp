#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cubeprog {

// Exact scalars. All arithmetic in this library is exact; there is no
// floating point on any value-producing path.
using Integer = mpz_class;
using Rational = mpq_class;

// Canonical rational num/den with den > 0 and gcd(num, den) = 1.
// Throws std::invalid_argument on zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

Integer num(const Rational& q);
Integer den(const Rational& q);

// Accepts "p", "-p" or "p/q" in base 10. Returns nothing on malformed
// input or zero denominator.
std::optional<Integer> parse_integer(const std::string& s);
std::optional<Rational> parse_rational(const std::string& s);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

// Non-negative remainder of a mod m (m > 0).
Integer mod_floor(const Integer& a, const Integer& m);

// Exact roots; nothing when the input is not a perfect power of the
// requested kind. Cube roots accept negative input.
std::optional<Integer> integer_sqrt_exact(const Integer& n);
std::optional<Integer> integer_cbrt_exact(const Integer& n);
std::optional<Rational> rational_sqrt_exact(const Rational& q);

// Primality of |n|. Deterministic Miller-Rabin witness set below 2^64;
// larger inputs use a fixed extra round count with derived bases.
bool is_prime(const Integer& n);

struct Factorization {
    int sign = 1;                                      // +1 or -1
    std::vector<std::pair<Integer, int>> factors;      // strictly increasing primes

    Integer value() const;
};

// Complete factorization of n != 0. Trial division up to 10^6, then
// Brent-cycle Pollard rho on the remaining cofactors.
Factorization factorize(const Integer& n);

// All positive divisors of n != 0, ascending.
std::vector<Integer> positive_divisors(const Integer& n);

struct SquarefreeDecomposition {
    Integer core;       // squarefree, carries the sign of the input
    Integer cofactor;   // positive; input = core * cofactor^2
};

SquarefreeDecomposition squarefree_decompose(const Integer& n);
bool is_squarefree(const Integer& n);

}  // namespace cubeprog
