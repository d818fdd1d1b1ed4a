#pragma once

#include "pailab/paillier.hpp"

#include <cstdint>

namespace pailab {

// Ciphertext forgery from the public key alone.
//
// Ciphertexts are deterministic: the r^{N lambda} factor is always 1, so
// c = (g_p^lambda)^m mod N^2. And g_p^lambda itself leaks from the public
// key, because L(g_p^lambda mod N^2) = mu^{-1} mod N together with
// 1 <= L(...) < N pins it to
//
//   g_p^lambda mod N^2 = N * (mu^{-1} mod N) + 1.
//
// Holding that base, anyone can encrypt. The scheme has no secret left.

struct ForgedEncryptor {
    PublicDecryptionKey pk;
    BigInt base;  // g_p^lambda mod N^2, recovered without lambda
};

// Computes base = N * mod_inv(mu, N) + 1. Never sees the secret key.
ForgedEncryptor recover_gp_lambda(const PublicDecryptionKey& pk);

// E'(m) = base^m mod N^2, bit-identical to the honest encryption of m
// under any randomizer.
Ciphertext forge_encrypt(const BigInt& m, const ForgedEncryptor& fe);

struct BreakReport {
    std::uint64_t trials = 0;
    std::uint64_t forgery_matches = 0;  // forged value == honest value
    std::uint64_t decrypt_matches = 0;  // both decrypt back to m

    bool complete() const {
        return forgery_matches == trials && decrypt_matches == trials;
    }
};

// Drives the forgery against an honest key pair. Each trial draws (m, r),
// encrypts honestly, forges, and compares. With exhaustive_m the plaintexts
// are 0, 1, ..., trials-1 instead of random draws, which at the tiny key
// covers all of Z_N. Failures are counted, not thrown.
BreakReport verify_break(const PublicDecryptionKey& pk, const SecretEncryptionKey& sk,
                         std::uint64_t trials, SeededRng& rng, bool exhaustive_m = false);

}  // namespace pailab
