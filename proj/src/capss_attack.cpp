#include "pailab/capss_attack.hpp"

#include "pailab/errors.hpp"
#include "pailab/modmath.hpp"

// This translation unit implements the adversary. It must see only what an
// adversary sees: public keys, credentials, and wire messages. Including
// the honest-party header would put secret state into scope, so refuse to
// build if it ever creeps in.
#ifdef PAILAB_CAPSS_CONTEXT_SECRETS
#error "capss_attack.cpp must not be compiled with context-manager secrets in scope"
#endif

namespace pailab {

bool capss_attack_unit_sees_no_secrets() {
#ifdef PAILAB_CAPSS_CONTEXT_SECRETS
    return false;
#else
    return true;
#endif
}

RecoveredContextSecrets recover_from_subscriber(const SubscriberCredential& cred,
                                                const PublicDecryptionKey& pk) {
    RecoveredContextSecrets out;
    out.context_id = cred.context_id;
    // c_neg_r decrypts (with the public key!) to N - r_i.
    out.r = mod_reduce(BigInt(pk.n - decrypt(cred.c_neg_r, pk)), pk.n);
    out.g_pow_neg_t =
        cred.blinded * mod_inv(cred.c_neg_r.value, pk.n_sq) % pk.n_sq;
    out.g_pow_t = mod_inv(out.g_pow_neg_t, pk.n_sq);
    return out;
}

RecoveredContextSecrets recover_from_publisher(const PublisherCredential& cred,
                                               const PublicDecryptionKey& pk) {
    RecoveredContextSecrets out;
    out.context_id = cred.context_id;
    out.r = decrypt(cred.c_r, pk);
    out.g_pow_t = cred.blinded * mod_inv(cred.c_r.value, pk.n_sq) % pk.n_sq;
    out.g_pow_neg_t = mod_inv(out.g_pow_t, pk.n_sq);
    return out;
}

BigInt collude_recover_subscription(const BlindedSubscription& sub,
                                    const RecoveredContextSecrets& secrets,
                                    const ContextPublic& ctx_public) {
    const PublicDecryptionKey& pk = ctx_public.pk;
    // x' = g^{-t} E'(-r x); multiplying by g^{t} lands back on the coset.
    const BigInt unblinded = mod_reduce(BigInt(sub.x_blinded * secrets.g_pow_t), pk.n_sq);
    const BigInt dec = decrypt(ciphertext_from_value(unblinded, pk), pk);
    const BigInt r_inv = mod_inv(secrets.r, pk.n);
    const BigInt x = mod_reduce(BigInt((pk.n - dec) * r_inv), pk.n);
    if (x >= (BigInt(1) << ctx_public.ell)) {
        throw RangeViolation("collude_recover_subscription: recovered x out of range");
    }
    return x;
}

BigInt infer_notification(const BigInt& d_prime, const RecoveredContextSecrets& secrets,
                          const BigInt& x, const ContextPublic& ctx_public) {
    const BigInt& n = ctx_public.pk.n;
    BigInt v;
    if (d_prime <= n / 2) {
        // d' = r (v - x) + r_v with v >= x and r_v < r, so v - x = floor(d'/r).
        v = x + d_prime / secrets.r;
    } else {
        // v < x wraps: d' = N - (r (x - v) - r_v), and r_v < r gives the
        // exact gap as a ceiling division.
        const BigInt gap = n - d_prime;
        v = x - (gap + secrets.r - 1) / secrets.r;
    }
    if (v < 0 || v >= (BigInt(1) << ctx_public.ell)) {
        throw RangeViolation("infer_notification: inferred v out of range");
    }
    return v;
}

}  // namespace pailab
