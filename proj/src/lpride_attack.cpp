#include "pailab/lpride_attack.hpp"

#include "pailab/errors.hpp"
#include "pailab/forgery.hpp"
#include "pailab/modmath.hpp"

// Adversary code: only public keys and protocol messages may be in scope.
#ifdef PAILAB_LPRIDE_AUTHORITY_SECRETS
#error "lpride_attack.cpp must not be compiled with authority secrets in scope"
#endif

namespace pailab {

bool lpride_attack_unit_sees_no_secrets() {
#ifdef PAILAB_LPRIDE_AUTHORITY_SECRETS
    return false;
#else
    return true;
#endif
}

namespace {

// Forges E'(1) and E'(-1) for every key entry; everything else divides out.
RecoveredLprideSecrets forge_units(const AuthorityPublicKey& pk) {
    RecoveredLprideSecrets sec;
    sec.pk = pk;
    for (const PublicDecryptionKey& key : pk.keys) {
        ForgedEncryptor fe = recover_gp_lambda(key);
        sec.forged_e_one.push_back(forge_encrypt(1, fe));
        sec.forged_e_neg_one.push_back(forge_encrypt(-1, fe));
    }
    return sec;
}

}  // namespace

RecoveredLprideSecrets recover_blindings(const RiderSecretKey& any_key,
                                         const AuthorityPublicKey& pk) {
    RecoveredLprideSecrets sec = forge_units(pk);
    for (std::size_t i = 1; i <= pk.omega(); ++i) {
        const BigInt& n_sq = pk.keys[i].n_sq;
        const BigInt inv_neg_one = mod_inv(sec.forged_e_neg_one[i].value, n_sq);
        const BigInt g_neg_eps = any_key.eps_blinded[i - 1] * inv_neg_one % n_sq;
        const BigInt g_neg_xi = any_key.xi_blinded[i - 1] * inv_neg_one % n_sq;
        sec.g_pow_neg_eps.push_back(g_neg_eps);
        sec.g_pow_neg_xi.push_back(g_neg_xi);
        sec.g_pow_eps.push_back(mod_inv(g_neg_eps, n_sq));
        sec.g_pow_xi.push_back(mod_inv(g_neg_xi, n_sq));
    }
    return sec;
}

RecoveredLprideSecrets recover_blindings(const TaxiSecretKey& any_key,
                                         const AuthorityPublicKey& pk) {
    RecoveredLprideSecrets sec = forge_units(pk);
    for (std::size_t i = 1; i <= pk.omega(); ++i) {
        const BigInt& n_sq = pk.keys[i].n_sq;
        const BigInt inv_one = mod_inv(sec.forged_e_one[i].value, n_sq);
        const BigInt g_eps = any_key.eps_blinded[i - 1] * inv_one % n_sq;
        const BigInt g_xi = any_key.xi_blinded[i - 1] * inv_one % n_sq;
        sec.g_pow_eps.push_back(g_eps);
        sec.g_pow_xi.push_back(g_xi);
        sec.g_pow_neg_eps.push_back(mod_inv(g_eps, n_sq));
        sec.g_pow_neg_xi.push_back(mod_inv(g_xi, n_sq));
    }
    return sec;
}

RiderSecretKey forge_rider_key(const RecoveredLprideSecrets& secrets) {
    RiderSecretKey sk_u;
    sk_u.e_neg_one = secrets.forged_e_neg_one;
    for (std::size_t i = 1; i <= secrets.pk.omega(); ++i) {
        const BigInt& n_sq = secrets.pk.keys[i].n_sq;
        sk_u.eps_blinded.push_back(
            secrets.g_pow_neg_eps[i - 1] * secrets.forged_e_neg_one[i].value % n_sq);
        sk_u.xi_blinded.push_back(
            secrets.g_pow_neg_xi[i - 1] * secrets.forged_e_neg_one[i].value % n_sq);
    }
    return sk_u;
}

TaxiSecretKey forge_taxi_key(const RecoveredLprideSecrets& secrets) {
    TaxiSecretKey sk_t;
    sk_t.e_one = secrets.forged_e_one;
    for (std::size_t i = 1; i <= secrets.pk.omega(); ++i) {
        const BigInt& n_sq = secrets.pk.keys[i].n_sq;
        sk_t.eps_blinded.push_back(
            secrets.g_pow_eps[i - 1] * secrets.forged_e_one[i].value % n_sq);
        sk_t.xi_blinded.push_back(
            secrets.g_pow_xi[i - 1] * secrets.forged_e_one[i].value % n_sq);
    }
    return sk_t;
}

Coordinates recover_rider_location(const RideRequest& req,
                                   const RecoveredLprideSecrets& secrets,
                                   const AuthorityPublicKey& pk) {
    if (req.c_plus.size() != pk.omega() || req.c_minus.size() != pk.omega()) {
        throw DomainViolation("recover_rider_location: component count mismatch");
    }
    Coordinates coords;
    const BigInt top = BigInt(1) << pk.ell;
    for (std::size_t i = 1; i <= pk.omega(); ++i) {
        const PublicDecryptionKey& key = pk.keys[i];
        BigInt c, neg_c;
        try {
            // Plus channel: g^{-eps} E'(c) * g^{eps} = E'(c).
            const BigInt plus =
                mod_reduce(BigInt(req.c_plus[i - 1] * secrets.g_pow_eps[i - 1]), key.n_sq);
            c = decrypt(ciphertext_from_value(plus, key), key);
            // Minus channel: g^{-xi} E'(-c) * g^{xi} = E'(-c).
            const BigInt minus =
                mod_reduce(BigInt(req.c_minus[i - 1] * secrets.g_pow_xi[i - 1]), key.n_sq);
            neg_c = decrypt(ciphertext_from_value(minus, key), key);
        } catch (const DomainViolation&) {
            // A channel that will not even decrypt counts as disagreement.
            throw Inconsistent("recover_rider_location: channel off the coset at coordinate " +
                               std::to_string(i));
        }
        if (neg_c != mod_reduce(BigInt(-c), key.n) || c >= top) {
            throw Inconsistent("recover_rider_location: channels disagree at coordinate " +
                               std::to_string(i));
        }
        coords.push_back(c);
    }
    return coords;
}

std::vector<BigInt> attempt_taxi_location(const TaxiLocationUpdate& upd,
                                          const RecoveredLprideSecrets& secrets,
                                          const AuthorityPublicKey& pk) {
    if (upd.c_plus.size() != pk.omega()) {
        throw DomainViolation("attempt_taxi_location: component count mismatch");
    }
    std::vector<BigInt> blinded;
    for (std::size_t i = 1; i <= pk.omega(); ++i) {
        const PublicDecryptionKey& key = pk.keys[i];
        // g^{xi} E'(c + r1) * g^{-xi} = E'(c + r1): the additive blind stays.
        const BigInt value =
            mod_reduce(BigInt(upd.c_plus[i - 1] * secrets.g_pow_neg_xi[i - 1]), key.n_sq);
        blinded.push_back(decrypt(ciphertext_from_value(value, key), key));
    }
    return blinded;
}

}  // namespace pailab
