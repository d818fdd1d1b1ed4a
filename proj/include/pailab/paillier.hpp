#pragma once

#include "pailab/bignum.hpp"
#include "pailab/modmath.hpp"

#include <cstdint>

namespace pailab {

// The Paillier variant used by the protocols in this repository. Roles are
// swapped relative to the classic scheme: lambda = lcm(p-1, q-1) acts as a
// secret *encryption* key and mu is published, so anyone can decrypt,
//
//   keygen:   N = p q,  g_p in Z*_{N^2} with gcd(L(g_p^lambda mod N^2), N) = 1,
//             mu = L(g_p^lambda mod N^2)^{-1} mod N
//   encrypt:  c = g_p^{m lambda} * r^{N lambda}  mod N^2
//   decrypt:  m = L(c) * mu                      mod N
//
// and the scheme stays additively homomorphic in the plaintext.

struct PublicDecryptionKey {
    BigInt n;
    BigInt n_sq;   // cached N^2
    BigInt g_p;
    BigInt mu;
    std::uint64_t fp = 0;  // modulus_fingerprint(n), stamped into ciphertexts
};

struct SecretEncryptionKey {
    BigInt lambda;
    // Factors kept for test oracles (group order computations). Protocol
    // code never reads them.
    BigInt p;
    BigInt q;
};

struct KeyPair {
    PublicDecryptionKey pk;
    SecretEncryptionKey sk;
};

struct Ciphertext {
    BigInt value;           // element of Z*_{N^2}
    BigInt n_sq;            // modulus the value lives under
    std::uint64_t key_fp = 0;
};

// Key generation with primes of half the requested modulus width. Resamples
// until N has exactly `bits` bits and until g_p's order condition
// gcd(L(g_p^lambda mod N^2), N) = 1 holds. bits must be at least 6.
KeyPair keygen(std::size_t bits, SeededRng& rng);

// Same construction from caller-chosen primes; tests pin p=5, q=7, g_p=2
// through this. Passing forced_g_p = nullptr samples g_p normally.
KeyPair keygen_from_primes(const BigInt& p, const BigInt& q, SeededRng& rng,
                           const BigInt* forced_g_p = nullptr);

// c = g_p^{m lambda} * r^{N lambda} mod N^2. m may be negative (reduced into
// [0, N) first); r must be a unit mod N. The result does not depend on r:
// r^{N lambda} == 1 (mod N^2) because N lambda is a multiple of the group
// exponent of Z*_{N^2}.
Ciphertext encrypt(const BigInt& m, const BigInt& r, const SecretEncryptionKey& sk,
                   const PublicDecryptionKey& pk);

// m = L(c) * mu mod N, canonical in [0, N). Needs no secret material.
BigInt decrypt(const Ciphertext& c, const PublicDecryptionKey& pk);

// Product of ciphertexts, decrypts to the sum of plaintexts.
Ciphertext hom_add(const Ciphertext& c1, const Ciphertext& c2);

// c^k mod N^2, decrypts to k*m. Negative k goes through modular inversion.
Ciphertext hom_scale(const Ciphertext& c, const BigInt& k);

// Wrap a raw group element as a ciphertext under pk. Used where protocol
// messages multiply blinded values and hand the product to decrypt.
Ciphertext ciphertext_from_value(const BigInt& value, const PublicDecryptionKey& pk);

}  // namespace pailab
