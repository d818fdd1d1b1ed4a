#include "pailab/lpride.hpp"

#include "pailab/errors.hpp"
#include "pailab/modmath.hpp"

namespace pailab {

namespace {

void check_coords(const Coordinates& coords, const AuthorityPublicKey& pk,
                  const char* what) {
    if (coords.size() != pk.omega()) {
        throw DomainViolation(std::string(what) + ": expected " +
                              std::to_string(pk.omega()) + " coordinates, got " +
                              std::to_string(coords.size()));
    }
    const BigInt top = BigInt(1) << pk.ell;
    for (const BigInt& c : coords) {
        if (c < 0 || c >= top) {
            throw RangeViolation(std::string(what) + ": coordinate outside [0, 2^ell)");
        }
    }
}

// Decrypts the product of two per-coordinate components under key entry i.
BigInt decrypt_product(const BigInt& a, const BigInt& b, const PublicDecryptionKey& key) {
    const BigInt product = mod_reduce(BigInt(a * b), key.n_sq);
    return decrypt(ciphertext_from_value(product, key), key);
}

}  // namespace

AuthorityKeys init_auth(const AuthorityParams& params, SeededRng& rng) {
    if (params.omega < 1) {
        throw ParameterSpace("init_auth: omega must be at least 1");
    }
    if (params.ell < 1 || params.ell >= params.kappa) {
        throw ParameterSpace("init_auth: need 1 <= ell < kappa");
    }
    const unsigned bits = params.tiny_key ? 6 : params.bits;
    // Fail before key generation when kappa cannot fit any modulus of the
    // requested size: N < 2^bits always, so 2^{kappa+1} <= N needs
    // kappa + 1 < bits.
    if (params.kappa + 1 >= bits) {
        throw ParameterSpace("init_auth: kappa too large for the modulus size");
    }

    const std::size_t entries = params.omega + 1;
    AuthorityKeys out;
    out.pk.ell = params.ell;
    out.pk.kappa = params.kappa;
    out.pk.shared_modulus = !params.per_coordinate_moduli;

    auto one_keypair = [&]() {
        if (params.tiny_key) {
            if (params.per_coordinate_moduli) {
                // Same 35-element modulus, fresh g_p (hence fresh mu) per entry.
                return keygen_from_primes(5, 7, rng);
            }
            static const BigInt g_p = 2;
            return keygen_from_primes(5, 7, rng, &g_p);
        }
        return keygen(bits, rng);
    };

    KeyPair shared;
    if (!params.per_coordinate_moduli) {
        shared = one_keypair();
    }
    for (std::size_t j = 0; j < entries; ++j) {
        KeyPair kp = params.per_coordinate_moduli ? one_keypair() : shared;
        if ((BigInt(1) << (params.kappa + 1)) > kp.pk.n) {
            throw ParameterSpace("init_auth: 2^{kappa+1} exceeds the modulus");
        }
        out.pk.g.push_back(rng.uniform_unit(kp.pk.n_sq));
        out.pk.keys.push_back(std::move(kp.pk));
        out.sk.enc.push_back(std::move(kp.sk));
    }
    if (!params.per_coordinate_moduli) {
        // One blind subgroup for all entries, like the single shared key.
        for (std::size_t j = 1; j < entries; ++j) {
            out.pk.g[j] = out.pk.g[0];
        }
    }

    for (unsigned i = 0; i < params.omega; ++i) {
        const BigInt& n = out.pk.keys[i + 1].n;
        out.sk.epsilon.push_back(rng.uniform_below(n));
        out.sk.xi.push_back(rng.uniform_below(n));
    }
    return out;
}

AuthorityKeys init_auth(unsigned ell, unsigned kappa, unsigned omega, unsigned bits,
                        SeededRng& rng) {
    AuthorityParams params;
    params.ell = ell;
    params.kappa = kappa;
    params.omega = omega;
    params.bits = bits;
    return init_auth(params, rng);
}

RiderSecretKey rider_keygen(const AuthorityPublicKey& pk, const AuthoritySecretKey& sk_auth,
                            SeededRng& rng) {
    RiderSecretKey sk_u;
    for (std::size_t j = 0; j < pk.keys.size(); ++j) {
        sk_u.e_neg_one.push_back(
            encrypt(-1, rng.uniform_unit(pk.keys[j].n), sk_auth.enc[j], pk.keys[j]));
    }
    for (std::size_t i = 1; i < pk.keys.size(); ++i) {
        const BigInt& n_sq = pk.keys[i].n_sq;
        const BigInt g_neg_eps =
            mod_pow_signed(pk.g[i], BigInt(-sk_auth.epsilon[i - 1]), n_sq);
        const BigInt g_neg_xi = mod_pow_signed(pk.g[i], BigInt(-sk_auth.xi[i - 1]), n_sq);
        sk_u.eps_blinded.push_back(g_neg_eps * sk_u.e_neg_one[i].value % n_sq);
        sk_u.xi_blinded.push_back(g_neg_xi * sk_u.e_neg_one[i].value % n_sq);
    }
    return sk_u;
}

TaxiSecretKey taxi_keygen(const AuthorityPublicKey& pk, const AuthoritySecretKey& sk_auth,
                          SeededRng& rng) {
    TaxiSecretKey sk_t;
    for (std::size_t j = 0; j < pk.keys.size(); ++j) {
        sk_t.e_one.push_back(
            encrypt(1, rng.uniform_unit(pk.keys[j].n), sk_auth.enc[j], pk.keys[j]));
    }
    for (std::size_t i = 1; i < pk.keys.size(); ++i) {
        const BigInt& n_sq = pk.keys[i].n_sq;
        const BigInt g_eps = powm(pk.g[i], sk_auth.epsilon[i - 1], n_sq);
        const BigInt g_xi = powm(pk.g[i], sk_auth.xi[i - 1], n_sq);
        sk_t.eps_blinded.push_back(g_eps * sk_t.e_one[i].value % n_sq);
        sk_t.xi_blinded.push_back(g_xi * sk_t.e_one[i].value % n_sq);
    }
    return sk_t;
}

RideRequest req_gen(const Coordinates& coords, const RiderSecretKey& sk_u,
                    const AuthorityPublicKey& pk, const ZoneId& zone) {
    check_coords(coords, pk, "req_gen");
    RideRequest req;
    req.zone = zone;
    for (std::size_t i = 1; i <= pk.omega(); ++i) {
        const BigInt& n_sq = pk.keys[i].n_sq;
        const BigInt& c = coords[i - 1];
        const BigInt& e_neg = sk_u.e_neg_one[i].value;
        req.c_plus.push_back(sk_u.eps_blinded[i - 1] *
                             mod_pow_signed(e_neg, BigInt(-c - 1), n_sq) % n_sq);
        req.c_minus.push_back(sk_u.xi_blinded[i - 1] *
                              mod_pow_signed(e_neg, BigInt(c - 1), n_sq) % n_sq);
    }
    return req;
}

TaxiUpdateWithBlinds taxi_update_with_blinds(const Coordinates& coords,
                                             const TaxiSecretKey& sk_t,
                                             const AuthorityPublicKey& pk, const ZoneId& zone,
                                             std::vector<BigInt> r1, std::vector<BigInt> r2) {
    check_coords(coords, pk, "taxi_update");
    if (r1.size() != pk.omega() || r2.size() != pk.omega()) {
        throw DomainViolation("taxi_update: blind vectors must have omega entries");
    }
    const BigInt blind_top = BigInt(1) << (pk.kappa - 1);
    for (std::size_t i = 0; i < pk.omega(); ++i) {
        if (r1[i] < 0 || r1[i] >= blind_top || r2[i] < 0 || r2[i] >= blind_top) {
            throw RangeViolation("taxi_update: blind outside [0, 2^{kappa-1})");
        }
    }

    TaxiUpdateWithBlinds out;
    out.update.zone = zone;
    for (std::size_t i = 1; i <= pk.omega(); ++i) {
        const BigInt& n_sq = pk.keys[i].n_sq;
        const BigInt& c = coords[i - 1];
        const BigInt& e_one = sk_t.e_one[i].value;
        out.update.c_plus.push_back(
            sk_t.xi_blinded[i - 1] *
            mod_pow_signed(e_one, BigInt(c - 1 + r1[i - 1]), n_sq) % n_sq);
        out.update.c_minus.push_back(
            sk_t.eps_blinded[i - 1] *
            mod_pow_signed(e_one, BigInt(-c - 1 + r2[i - 1]), n_sq) % n_sq);
    }
    out.r1 = std::move(r1);
    out.r2 = std::move(r2);
    return out;
}

TaxiUpdateWithBlinds taxi_update_retaining_blinds(const Coordinates& coords,
                                                  const TaxiSecretKey& sk_t,
                                                  const AuthorityPublicKey& pk,
                                                  const ZoneId& zone, SeededRng& rng) {
    const BigInt blind_top = BigInt(1) << (pk.kappa - 1);
    std::vector<BigInt> r1, r2;
    for (std::size_t i = 0; i < pk.omega(); ++i) {
        r1.push_back(rng.uniform_below(blind_top));
        r2.push_back(rng.uniform_below(blind_top));
    }
    return taxi_update_with_blinds(coords, sk_t, pk, zone, std::move(r1), std::move(r2));
}

TaxiLocationUpdate taxi_update(const Coordinates& coords, const TaxiSecretKey& sk_t,
                               const AuthorityPublicKey& pk, const ZoneId& zone,
                               SeededRng& rng) {
    return taxi_update_retaining_blinds(coords, sk_t, pk, zone, rng).update;
}

BlindedDifferences rsp_decrypt_differences(const RideRequest& req,
                                           const TaxiLocationUpdate& upd,
                                           const AuthorityPublicKey& pk) {
    if (req.zone != upd.zone) {
        throw ZoneMismatch("rsp_decrypt_differences: rider is in zone '" + req.zone +
                           "', taxi in '" + upd.zone + "'");
    }
    if (req.c_plus.size() != pk.omega() || upd.c_plus.size() != pk.omega()) {
        throw DomainViolation("rsp_decrypt_differences: component count mismatch");
    }
    BlindedDifferences diffs;
    for (std::size_t i = 1; i <= pk.omega(); ++i) {
        // g^{xi} E'(c_t + r1) * g^{-xi} E'(-c_u) and the eps mirror.
        diffs.d1.push_back(decrypt_product(upd.c_plus[i - 1], req.c_minus[i - 1], pk.keys[i]));
        diffs.d2.push_back(decrypt_product(upd.c_minus[i - 1], req.c_plus[i - 1], pk.keys[i]));
    }
    return diffs;
}

std::uint32_t rsp_match(const RideRequest& req, const std::vector<TaxiCandidate>& candidates,
                        const AuthorityPublicKey& pk, const DistanceOracle& oracle) {
    bool found = false;
    std::uint32_t best_id = 0;
    BigInt best_distance;
    for (const TaxiCandidate& cand : candidates) {
        if (cand.update.zone != req.zone) {
            continue;
        }
        rsp_decrypt_differences(req, cand.update, pk);
        const BigInt distance = oracle(cand.taxi_id);
        if (!found || distance < best_distance ||
            (distance == best_distance && cand.taxi_id < best_id)) {
            found = true;
            best_id = cand.taxi_id;
            best_distance = distance;
        }
    }
    if (!found) {
        throw ZoneMismatch("rsp_match: no candidate taxi in zone '" + req.zone + "'");
    }
    return best_id;
}

}  // namespace pailab
