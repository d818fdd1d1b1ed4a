#pragma once

#include "pailab/paillier.hpp"

#include <cstdint>
#include <string>
#include <vector>

// Wire-format types for the context-aware pub/sub protocol: everything a
// subscriber, publisher, or broker ever sees on the network. Context-manager
// secrets live in capss.hpp; this header deliberately knows nothing about
// them so that code handling messages can be compiled without access to
// secret state.

namespace pailab {

using ContextId = std::uint32_t;

// Per-context public data handed to every participant.
struct ContextPublic {
    ContextId id = 0;
    PublicDecryptionKey pk;
    unsigned ell = 0;  // attribute values are integers in [0, 2^ell)
};

// Issued on subscriber registration: E'(-r_i), E'(-1), and the blinded
// third component g^{-t_i} E'(-r_i). The blind keeps the raw value off the
// ciphertext coset, so it travels as a bare residue.
struct SubscriberCredential {
    ContextId context_id = 0;
    Ciphertext c_neg_r;
    Ciphertext c_neg_one;
    BigInt blinded;
};

// Publisher mirror with positive signs: E'(r_i), E'(1), g^{t_i} E'(r_i).
struct PublisherCredential {
    ContextId context_id = 0;
    Ciphertext c_r;
    Ciphertext c_one;
    BigInt blinded;
};

enum class CompareOp {
    Less,          // subscription matches when v < x
    GreaterEqual,  // subscription matches when v >= x
};

// A blinded atomic subscription (a, x', alpha).
struct BlindedSubscription {
    std::string attribute;
    BigInt x_blinded;
    CompareOp op = CompareOp::GreaterEqual;
};

// A blinded notification for one attribute. The payload rides along
// unencrypted, tagged with the key group that would protect it in a full
// deployment.
struct BlindedNotification {
    std::string attribute;
    BigInt v_blinded;
    std::vector<std::uint8_t> payload;
    std::string key_group = "kg-0";
};

// Boolean combination of atomic subscriptions. Leaves hold a
// BlindedSubscription; inner nodes AND/OR their children.
struct SubscriptionFormula {
    enum class Kind { Leaf, And, Or };
    Kind kind = Kind::Leaf;
    BlindedSubscription leaf;                    // when kind == Leaf
    std::vector<SubscriptionFormula> children;   // when kind != Leaf
};

SubscriptionFormula make_leaf(BlindedSubscription sub);
// Both constructors refuse an empty child list.
SubscriptionFormula make_and(std::vector<SubscriptionFormula> children);
SubscriptionFormula make_or(std::vector<SubscriptionFormula> children);

}  // namespace pailab
