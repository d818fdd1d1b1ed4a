#pragma once

#include "pailab/lpride_messages.hpp"
#include "pailab/paillier.hpp"

#include <functional>
#include <utility>

// Honest-party side of the ride-hailing protocol: the trusted authority
// and its issuance operations, rider request generation, taxi location
// updates, and the ride service provider's matching step.
//
// Attack translation units must not include this header; the macro below
// makes violations fail the build.
#define PAILAB_LPRIDE_AUTHORITY_SECRETS 1

namespace pailab {

struct AuthoritySecretKey {
    std::vector<SecretEncryptionKey> enc;  // omega+1 entries, aligned with pk.keys
    std::vector<BigInt> epsilon;           // omega blinding exponents
    std::vector<BigInt> xi;                // omega blinding exponents
};

struct AuthorityKeys {
    AuthorityPublicKey pk;
    AuthoritySecretKey sk;
};

struct AuthorityParams {
    unsigned ell = 16;    // coordinate bit width
    unsigned kappa = 64;  // blind bit width
    unsigned omega = 8;   // dimensions
    unsigned bits = 1024; // modulus size
    bool per_coordinate_moduli = false;
    bool tiny_key = false;  // fixed 35-element key (p=5, q=7, g_p=2)
};

// Sets up the authority. Requires ell >= 1, omega >= 1, ell < kappa (so a
// coordinate always fits under a blind), and 2^{kappa+1} <= N (the blind
// bound relative to the modulus). ParameterSpace otherwise.
AuthorityKeys init_auth(const AuthorityParams& params, SeededRng& rng);
AuthorityKeys init_auth(unsigned ell, unsigned kappa, unsigned omega, unsigned bits,
                        SeededRng& rng);

// Key issuance. Encryption randomness is drawn fresh per component, as the
// authority would; the issued components do not depend on it.
RiderSecretKey rider_keygen(const AuthorityPublicKey& pk, const AuthoritySecretKey& sk_auth,
                            SeededRng& rng);
TaxiSecretKey taxi_keygen(const AuthorityPublicKey& pk, const AuthoritySecretKey& sk_auth,
                          SeededRng& rng);

// Rider side: c_plus[i] = eps_blinded[i] * E'(-1)^{-c[i]-1}, c_minus[i] =
// xi_blinded[i] * E'(-1)^{c[i]-1}, which work out to g^{-eps_i} E'(c[i])
// and g^{-xi_i} E'(-c[i]).
RideRequest req_gen(const Coordinates& coords, const RiderSecretKey& sk_u,
                    const AuthorityPublicKey& pk, const ZoneId& zone);

// Taxi side. The update carries c_plus[i] = xi_blinded[i] * E'(1)^{c[i]-1+r1[i]}
// and c_minus[i] = eps_blinded[i] * E'(1)^{-c[i]-1+r2[i]} with fresh
// kappa-1-bit blinds r1, r2. The blinds are returned to the caller (the
// taxi keeps them private; tests use them as ground truth) and never
// appear in the update itself.
struct TaxiUpdateWithBlinds {
    TaxiLocationUpdate update;
    std::vector<BigInt> r1;
    std::vector<BigInt> r2;
};
TaxiUpdateWithBlinds taxi_update_retaining_blinds(const Coordinates& coords,
                                                  const TaxiSecretKey& sk_t,
                                                  const AuthorityPublicKey& pk,
                                                  const ZoneId& zone, SeededRng& rng);
// Same with caller-chosen blinds; each r1[i], r2[i] must lie in [0, 2^{kappa-1}).
TaxiUpdateWithBlinds taxi_update_with_blinds(const Coordinates& coords,
                                             const TaxiSecretKey& sk_t,
                                             const AuthorityPublicKey& pk, const ZoneId& zone,
                                             std::vector<BigInt> r1, std::vector<BigInt> r2);
// Protocol-shaped convenience: draws blinds and discards them.
TaxiLocationUpdate taxi_update(const Coordinates& coords, const TaxiSecretKey& sk_t,
                               const AuthorityPublicKey& pk, const ZoneId& zone,
                               SeededRng& rng);

// RSP step one: multiply opposite-sign components and decrypt with the
// public key. ZoneMismatch when the two parties are in different zones;
// DomainViolation when the blinds fail to cancel (mixed key material).
BlindedDifferences rsp_decrypt_differences(const RideRequest& req,
                                           const TaxiLocationUpdate& upd,
                                           const AuthorityPublicKey& pk);

// RSP step two: pick a taxi for the request. Every zone-matching candidate
// is run through rsp_decrypt_differences first (the protocol's
// cryptographic path), then selection is delegated to a plaintext
// distance oracle, argmin with ties to the lowest taxi id. The oracle
// stands in for the original scheme's selection subroutine, which is out
// of scope here.
using DistanceOracle = std::function<BigInt(std::uint32_t taxi_id)>;
std::uint32_t rsp_match(const RideRequest& req, const std::vector<TaxiCandidate>& candidates,
                        const AuthorityPublicKey& pk, const DistanceOracle& oracle);

}  // namespace pailab
