#pragma once

#include "pailab/lpride_messages.hpp"
#include "pailab/paillier.hpp"

// Breaking the ride-hailing scheme from any single insider key. Forged
// E'(+-1) ciphertexts (derived from the public key alone) divide every
// blinded key component down to its bare blind g^{+-eps_i} or g^{+-xi_i}.
// With those in hand the authority is redundant: fresh rider and taxi keys
// can be minted at will, and every ride request decrypts to the rider's
// exact coordinates.
//
// Taxi coordinates stay out of reach: their components carry additive
// randoms under the blind, and stripping the blind still leaves c + r1.
// attempt_taxi_location exposes exactly that residual.
//
// This translation unit consumes public keys, issued keys, and wire
// messages only; see the guard in lpride_attack.cpp.

namespace pailab {

struct RecoveredLprideSecrets {
    AuthorityPublicKey pk;
    std::vector<Ciphertext> forged_e_one;      // omega+1 entries, per key entry
    std::vector<Ciphertext> forged_e_neg_one;  // omega+1 entries
    std::vector<BigInt> g_pow_eps;             // omega values g^{eps_i} mod N_i^2
    std::vector<BigInt> g_pow_xi;
    std::vector<BigInt> g_pow_neg_eps;
    std::vector<BigInt> g_pow_neg_xi;
};

// Lifts all blinds from one issued key. Either party's key works and both
// yield identical secrets.
RecoveredLprideSecrets recover_blindings(const RiderSecretKey& any_key,
                                         const AuthorityPublicKey& pk);
RecoveredLprideSecrets recover_blindings(const TaxiSecretKey& any_key,
                                         const AuthorityPublicKey& pk);

// Mint keys componentwise equal to authority-issued ones.
RiderSecretKey forge_rider_key(const RecoveredLprideSecrets& secrets);
TaxiSecretKey forge_taxi_key(const RecoveredLprideSecrets& secrets);

// Strips the blinds from a ride request and decrypts the rider's exact
// coordinates. Each coordinate is read twice, once per channel
// (c_plus via g^{eps_i}, c_minus via g^{xi_i}); Inconsistent when the two
// reads disagree, which signals wrong secrets or a tampered request.
Coordinates recover_rider_location(const RideRequest& req,
                                   const RecoveredLprideSecrets& secrets,
                                   const AuthorityPublicKey& pk);

// The corresponding attempt on a taxi update recovers only c_t[i] + r1[i]
// mod N: the additive blind survives. Returned so scenarios can
// demonstrate the residual; never a location recovery.
std::vector<BigInt> attempt_taxi_location(const TaxiLocationUpdate& upd,
                                          const RecoveredLprideSecrets& secrets,
                                          const AuthorityPublicKey& pk);

// Compile-time isolation witness: true iff this attack translation unit
// was built without the authority-secrets header.
bool lpride_attack_unit_sees_no_secrets();

}  // namespace pailab
