#pragma once

// Shared test fixtures. The 35-element key (p=5, q=7, g_p=2) is small
// enough for exhaustive sweeps and brute-force oracles.

#include "pailab/bignum.hpp"
#include "pailab/paillier.hpp"

namespace fixtures {

inline pailab::KeyPair tiny_keypair() {
    pailab::SeededRng rng(11);
    static const pailab::BigInt g_p = 2;
    return pailab::keygen_from_primes(5, 7, rng, &g_p);
}

}  // namespace fixtures
