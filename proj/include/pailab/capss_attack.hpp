#pragma once

#include "pailab/capss_messages.hpp"
#include "pailab/paillier.hpp"

// Breaking the pub/sub blinding. A registered party holds E'(+-r_i) next
// to its blinded copy g^{+-t_i} E'(+-r_i); one division exposes the blind.
// From there a colluding broker strips any subscription or notification in
// the context.
//
// Everything here consumes public values and one party's own credential.
// The implementation is compiled without access to the context manager's
// secret state (see the guard in capss_attack.cpp).

namespace pailab {

struct RecoveredContextSecrets {
    ContextId context_id = 0;
    BigInt r;           // the context multiplier r_i
    BigInt g_pow_t;     // g^{t_i} mod N^2
    BigInt g_pow_neg_t; // its inverse
};

// Subscriber path: r_i = N - D'(E'(-r_i)); g^{-t_i} = blinded / E'(-r_i).
RecoveredContextSecrets recover_from_subscriber(const SubscriberCredential& cred,
                                                const PublicDecryptionKey& pk);

// Publisher path, positive signs: r_i = D'(E'(r_i)); g^{t_i} = blinded / E'(r_i).
RecoveredContextSecrets recover_from_publisher(const PublisherCredential& cred,
                                               const PublicDecryptionKey& pk);

// Colluding-broker recovery of the plaintext subscription value:
// unblind x' with g^{t_i}, decrypt to -r_i x, divide by r_i.
// RangeViolation when the result lands outside [0, 2^ell), which signals
// secrets from the wrong context.
BigInt collude_recover_subscription(const BlindedSubscription& sub,
                                    const RecoveredContextSecrets& secrets,
                                    const ContextPublic& ctx_public);

// Recovers the notification value v from a broker match output d'. Exact
// because any blind sampler meeting the protocol's own threshold
// constraints must keep r_v below r_i.
BigInt infer_notification(const BigInt& d_prime, const RecoveredContextSecrets& secrets,
                          const BigInt& x, const ContextPublic& ctx_public);

// Compile-time isolation witness: true iff the attack translation unit was
// built without the context-secrets header.
bool capss_attack_unit_sees_no_secrets();

}  // namespace pailab
