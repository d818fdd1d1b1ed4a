#pragma once

#include "pailab/paillier.hpp"

#include <cstdint>
#include <string>
#include <vector>

// Wire formats and issued keys for the ride-hailing protocol: what riders,
// taxis, and the ride service provider hold or exchange. The authority's
// secret state lives in lpride.hpp and is deliberately absent here, so
// attack code can be compiled against this header alone.
//
// Coordinates are omega-dimensional integer vectors; index i of any
// per-coordinate vector below refers to dimension i+1 of the protocol's
// 1-based notation. Key material comes as omega+1 entries: entry 0 backs
// the standalone E'(+-1) component, entry i backs coordinate i. The default
// configuration shares one modulus across all entries; a generalized
// deployment gives every entry its own.

namespace pailab {

using ZoneId = std::string;
using Coordinates = std::vector<BigInt>;

struct AuthorityPublicKey {
    std::vector<PublicDecryptionKey> keys;  // omega+1 entries
    std::vector<BigInt> g;                  // blind bases, aligned with keys; entry 0 idle
    unsigned ell = 0;    // coordinate bit width
    unsigned kappa = 0;  // blind bit width: taxis draw kappa-1-bit randoms
    bool shared_modulus = true;

    std::size_t omega() const { return keys.empty() ? 0 : keys.size() - 1; }
};

// Issued to a rider: E'(-1) copies plus the blinded products
// g^{-eps_i} E'(-1) and g^{-xi_i} E'(-1). The products sit off the
// ciphertext coset and travel as bare residues.
struct RiderSecretKey {
    std::vector<Ciphertext> e_neg_one;  // omega+1 copies, one per key entry
    std::vector<BigInt> eps_blinded;    // omega values
    std::vector<BigInt> xi_blinded;     // omega values
};

// Taxi mirror with positive signs: E'(1), g^{eps_i} E'(1), g^{xi_i} E'(1).
struct TaxiSecretKey {
    std::vector<Ciphertext> e_one;
    std::vector<BigInt> eps_blinded;
    std::vector<BigInt> xi_blinded;
};

// Rider -> RSP. c_plus[i] = g^{-eps_i} E'(c_u[i]), c_minus[i] =
// g^{-xi_i} E'(-c_u[i]).
struct RideRequest {
    ZoneId zone;
    std::vector<BigInt> c_plus;
    std::vector<BigInt> c_minus;
};

// Taxi -> RSP. c_plus[i] = g^{xi_i} E'(c_t[i] + r1[i]), c_minus[i] =
// g^{eps_i} E'(-c_t[i] + r2[i]). The randoms r1, r2 stay with the taxi;
// they are not part of the message.
struct TaxiLocationUpdate {
    ZoneId zone;
    std::vector<BigInt> c_plus;
    std::vector<BigInt> c_minus;
};

// What the RSP learns from one rider/taxi pair: the blinds cancel in the
// products, leaving d1[i] = c_t[i] + r1[i] - c_u[i] and d2[i] =
// c_u[i] - c_t[i] + r2[i], both mod N.
struct BlindedDifferences {
    std::vector<BigInt> d1;
    std::vector<BigInt> d2;
};

struct TaxiCandidate {
    std::uint32_t taxi_id = 0;
    TaxiLocationUpdate update;
};

}  // namespace pailab
