#include "pailab/capss.hpp"

#include "pailab/errors.hpp"
#include "pailab/modmath.hpp"

#include <utility>

namespace pailab {

namespace {

void check_attribute_range(const BigInt& value, unsigned ell, const char* what) {
    if (value < 0 || value >= (BigInt(1) << ell)) {
        throw RangeViolation(std::string(what) + ": value outside [0, 2^ell)");
    }
}

}  // namespace

SubscriptionFormula make_leaf(BlindedSubscription sub) {
    SubscriptionFormula f;
    f.kind = SubscriptionFormula::Kind::Leaf;
    f.leaf = std::move(sub);
    return f;
}

SubscriptionFormula make_and(std::vector<SubscriptionFormula> children) {
    if (children.empty()) {
        throw DomainViolation("make_and: a conjunction needs at least one child");
    }
    SubscriptionFormula f;
    f.kind = SubscriptionFormula::Kind::And;
    f.children = std::move(children);
    return f;
}

SubscriptionFormula make_or(std::vector<SubscriptionFormula> children) {
    if (children.empty()) {
        throw DomainViolation("make_or: a disjunction needs at least one child");
    }
    SubscriptionFormula f;
    f.kind = SubscriptionFormula::Kind::Or;
    f.children = std::move(children);
    return f;
}

Context context_init(unsigned bits, unsigned ell, SeededRng& rng) {
    return context_init_with_keys(keygen(bits, rng), ell, rng);
}

Context context_init_with_keys(KeyPair kp, unsigned ell, SeededRng& rng) {
    Context ctx;
    ctx.pk = std::move(kp.pk);
    ctx.sk = std::move(kp.sk);
    ctx.ell = ell;

    // r must fit 2^ell attribute steps below the decision threshold.
    const BigInt half = ctx.pk.n / 2;
    const BigInt upper = half >> ell;
    if (upper < 1) {
        throw ParameterSpace("context_init: 2^ell exceeds floor(N/2), no room for r");
    }
    do {
        ctx.r = rng.uniform_range(1, upper);
    } while (gcd(ctx.r, ctx.pk.n) != 1);

    ctx.t = 1 + rng.uniform_below(BigInt(ctx.pk.n - 1));
    ctx.g = rng.uniform_unit(ctx.pk.n_sq);
    return ctx;
}

SubscriberCredential register_subscriber(const Context& ctx, SeededRng& rng) {
    SubscriberCredential cred;
    cred.context_id = ctx.id;
    cred.c_neg_r = encrypt(-ctx.r, rng.uniform_unit(ctx.pk.n), ctx.sk, ctx.pk);
    cred.c_neg_one = encrypt(-1, rng.uniform_unit(ctx.pk.n), ctx.sk, ctx.pk);
    const BigInt g_neg_t = mod_pow_signed(ctx.g, -ctx.t, ctx.pk.n_sq);
    cred.blinded = g_neg_t * cred.c_neg_r.value % ctx.pk.n_sq;
    return cred;
}

PublisherCredential register_publisher(const Context& ctx, SeededRng& rng) {
    PublisherCredential cred;
    cred.context_id = ctx.id;
    cred.c_r = encrypt(ctx.r, rng.uniform_unit(ctx.pk.n), ctx.sk, ctx.pk);
    cred.c_one = encrypt(1, rng.uniform_unit(ctx.pk.n), ctx.sk, ctx.pk);
    const BigInt g_t = mod_pow_signed(ctx.g, ctx.t, ctx.pk.n_sq);
    cred.blinded = g_t * cred.c_r.value % ctx.pk.n_sq;
    return cred;
}

BigInt sample_rv(const Context& ctx, const BigInt& v, SeededRng& rng) {
    check_attribute_range(v, ctx.ell, "sample_rv");
    return rng.uniform_below(ctx.r);
}

BlindedNotification blind_notification(const PublisherCredential& cred,
                                       const ContextPublic& ctx_public,
                                       const std::string& attribute, const BigInt& v,
                                       const BigInt& r_v, std::vector<std::uint8_t> payload,
                                       std::string key_group) {
    check_attribute_range(v, ctx_public.ell, "blind_notification");
    if (r_v < 0) {
        throw RangeViolation("blind_notification: r_v must be nonnegative");
    }
    const BigInt& n_sq = ctx_public.pk.n_sq;
    // blinded * c_r^{v-1} * c_one^{r_v}; the exponent v-1 is -1 when v=0.
    BigInt acc = cred.blinded;
    acc = acc * mod_pow_signed(cred.c_r.value, BigInt(v - 1), n_sq) % n_sq;
    acc = acc * mod_pow_signed(cred.c_one.value, r_v, n_sq) % n_sq;

    BlindedNotification note;
    note.attribute = attribute;
    note.v_blinded = acc;
    note.payload = std::move(payload);
    note.key_group = std::move(key_group);
    return note;
}

BlindedSubscription blind_subscription(const SubscriberCredential& cred,
                                       const ContextPublic& ctx_public,
                                       const std::string& attribute, const BigInt& x,
                                       CompareOp op) {
    check_attribute_range(x, ctx_public.ell, "blind_subscription");
    const BigInt& n_sq = ctx_public.pk.n_sq;
    BlindedSubscription sub;
    sub.attribute = attribute;
    sub.x_blinded =
        cred.blinded * mod_pow_signed(cred.c_neg_r.value, BigInt(x - 1), n_sq) % n_sq;
    sub.op = op;
    return sub;
}

MatchResult match_atomic(const BigInt& x_blinded, const BigInt& v_blinded,
                         const PublicDecryptionKey& pk) {
    const BigInt product = mod_reduce(BigInt(x_blinded * v_blinded), pk.n_sq);
    const BigInt d_prime = decrypt(ciphertext_from_value(product, pk), pk);
    const bool ge = d_prime <= pk.n / 2;
    return MatchResult{d_prime, ge};
}

namespace {

bool evaluate_node(const SubscriptionFormula& node,
                   const std::vector<BlindedNotification>& notifications,
                   const PublicDecryptionKey& pk) {
    switch (node.kind) {
        case SubscriptionFormula::Kind::Leaf: {
            const BlindedNotification* found = nullptr;
            for (const auto& note : notifications) {
                if (note.attribute == node.leaf.attribute) {
                    found = &note;
                    break;
                }
            }
            if (found == nullptr) {
                throw MissingAttribute("evaluate_subscription: no notification for '" +
                                       node.leaf.attribute + "'");
            }
            const bool ge = match_atomic(node.leaf.x_blinded, found->v_blinded, pk).ge;
            return node.leaf.op == CompareOp::GreaterEqual ? ge : !ge;
        }
        case SubscriptionFormula::Kind::And: {
            bool all = true;
            for (const auto& child : node.children) {
                all = evaluate_node(child, notifications, pk) && all;
            }
            return all;
        }
        case SubscriptionFormula::Kind::Or: {
            bool any = false;
            for (const auto& child : node.children) {
                any = evaluate_node(child, notifications, pk) || any;
            }
            return any;
        }
    }
    throw DomainViolation("evaluate_subscription: malformed formula node");
}

}  // namespace

bool evaluate_subscription(const SubscriptionFormula& formula,
                           const std::vector<BlindedNotification>& notifications,
                           const PublicDecryptionKey& pk) {
    return evaluate_node(formula, notifications, pk);
}

}  // namespace pailab
