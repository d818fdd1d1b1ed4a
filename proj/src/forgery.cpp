#include "pailab/forgery.hpp"

#include "pailab/errors.hpp"
#include "pailab/modmath.hpp"

namespace pailab {

ForgedEncryptor recover_gp_lambda(const PublicDecryptionKey& pk) {
    // mu is a unit mod N for any well-formed key; if it is not, the key
    // was corrupt and mod_inv reports that.
    BigInt inv_mu = mod_inv(pk.mu, pk.n);
    BigInt base = pk.n * inv_mu + 1;
    return ForgedEncryptor{pk, base};
}

Ciphertext forge_encrypt(const BigInt& m, const ForgedEncryptor& fe) {
    return Ciphertext{mod_pow_signed(fe.base, m, fe.pk.n_sq), fe.pk.n_sq, fe.pk.fp};
}

BreakReport verify_break(const PublicDecryptionKey& pk, const SecretEncryptionKey& sk,
                         std::uint64_t trials, SeededRng& rng, bool exhaustive_m) {
    ForgedEncryptor fe = recover_gp_lambda(pk);
    BreakReport report;
    report.trials = trials;
    for (std::uint64_t i = 0; i < trials; ++i) {
        BigInt m = exhaustive_m ? BigInt(i) : rng.uniform_below(pk.n);
        BigInt r = rng.uniform_unit(pk.n);
        Ciphertext honest = encrypt(m, r, sk, pk);
        Ciphertext forged = forge_encrypt(m, fe);
        if (honest.value == forged.value) {
            ++report.forgery_matches;
        }
        if (decrypt(honest, pk) == mod_reduce(m, pk.n) &&
            decrypt(forged, pk) == mod_reduce(m, pk.n)) {
            ++report.decrypt_matches;
        }
    }
    return report;
}

}  // namespace pailab
