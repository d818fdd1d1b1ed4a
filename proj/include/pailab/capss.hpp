#pragma once

#include "pailab/capss_messages.hpp"
#include "pailab/paillier.hpp"

// Honest-party side of the context-aware pub/sub protocol: the context
// manager's secret state, registration, blinding, and broker matching.
//
// Translation units that implement attacks must not include this header.
// The macro below makes that checkable at compile time.
#define PAILAB_CAPSS_CONTEXT_SECRETS 1

namespace pailab {

// Everything the context manager holds for one context. The key pair plus
// three secrets: the blinding exponent t, the attribute multiplier r, and
// the base g of the blinding subgroup.
struct Context {
    ContextId id = 0;
    PublicDecryptionKey pk;
    SecretEncryptionKey sk;
    BigInt t;    // uniform in [1, N)
    BigInt r;    // in [1, floor(floor(N/2) / 2^ell)], coprime to N
    BigInt g;    // uniform unit mod N^2
    unsigned ell = 0;

    ContextPublic public_view() const { return ContextPublic{id, pk, ell}; }
};

// Creates a context over a fresh key pair of the given modulus size.
// Throws ParameterSpace when 2^ell exceeds floor(N/2), which leaves no
// room for the multiplier r.
Context context_init(unsigned bits, unsigned ell, SeededRng& rng);

// Same, but over a caller-supplied key pair. Used for fixed tiny keys.
Context context_init_with_keys(KeyPair kp, unsigned ell, SeededRng& rng);

// Credential issuance. Fresh encryption randomness is drawn per component,
// as an honest issuer would, even though ciphertexts do not depend on it.
SubscriberCredential register_subscriber(const Context& ctx, SeededRng& rng);
PublisherCredential register_publisher(const Context& ctx, SeededRng& rng);

// Draws the notification blind r_v uniform in [0, r_i). Validates
// 0 <= v < 2^ell first so that a bad attribute value fails here rather
// than deep inside a broker.
BigInt sample_rv(const Context& ctx, const BigInt& v, SeededRng& rng);

// Publisher-side blinding: v' = blinded * c_r^{v-1} * c_one^{r_v} mod N^2,
// which works out to g^{t_i} E'(r_i v + r_v). Publishers hold no key
// material; every factor comes from the credential.
BlindedNotification blind_notification(const PublisherCredential& cred,
                                       const ContextPublic& ctx_public,
                                       const std::string& attribute, const BigInt& v,
                                       const BigInt& r_v,
                                       std::vector<std::uint8_t> payload = {},
                                       std::string key_group = "kg-0");

// Subscriber-side blinding: x' = blinded * c_neg_r^{x-1} mod N^2, which is
// g^{-t_i} E'(-r_i x).
BlindedSubscription blind_subscription(const SubscriberCredential& cred,
                                       const ContextPublic& ctx_public,
                                       const std::string& attribute, const BigInt& x,
                                       CompareOp op);

struct MatchResult {
    BigInt d_prime;  // r_i (v - x) + r_v mod N
    bool ge = false; // the broker's "v >= x" verdict
};

// Broker primitive: multiplies the two blinded values, decrypts with the
// public key, and thresholds at floor(N/2). The blinds cancel only when
// both sides come from the same context; otherwise the product falls off
// the ciphertext coset and decryption reports DomainViolation.
MatchResult match_atomic(const BigInt& x_blinded, const BigInt& v_blinded,
                         const PublicDecryptionKey& pk);

// Evaluates a subscription formula against a notification set. Every leaf
// is resolved (no short-circuiting): a leaf whose attribute has no
// notification raises MissingAttribute regardless of position.
bool evaluate_subscription(const SubscriptionFormula& formula,
                           const std::vector<BlindedNotification>& notifications,
                           const PublicDecryptionKey& pk);

}  // namespace pailab
