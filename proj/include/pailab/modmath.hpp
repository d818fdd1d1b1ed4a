#pragma once

#include "pailab/bignum.hpp"

namespace pailab {

// Error probability below 2^-80 per candidate; plenty for lab key material.
inline constexpr int kMillerRabinRounds = 40;

// Miller-Rabin with `rounds` random bases from rng, behind a small-prime
// sieve that rejects most composites cheaply.
bool is_probable_prime(const BigInt& n, SeededRng& rng, int rounds = kMillerRabinRounds);

// Random probable prime with exactly `bits` bits (top and low bits forced).
// Loops until one is found. bits must be at least 3.
BigInt gen_prime(std::size_t bits, SeededRng& rng);

// Least common multiple, a * b / gcd(a, b). Arguments must be positive.
BigInt lcm(const BigInt& a, const BigInt& b);

// Inverse of a mod n via extended Euclid, result in (0, n).
// Throws NotInvertible when gcd(a, n) != 1.
BigInt mod_inv(const BigInt& a, const BigInt& n);

// base^exp mod n for signed exp. Negative exponents are computed as
// mod_inv(base, n)^|exp|, since the group order is secret to most callers.
BigInt mod_pow_signed(const BigInt& base, const BigInt& exp, const BigInt& n);

// L(x) = (x - 1) / N, defined for 0 <= x < N^2 with x == 1 (mod N).
// Inputs off that coset are malformed or still-blinded ciphertexts and
// throw DomainViolation.
BigInt l_function(const BigInt& x, const BigInt& n);

}  // namespace pailab
