#include "pailab/paillier.hpp"

#include "pailab/errors.hpp"

namespace pailab {

namespace {

// Completes a key pair from chosen primes. Samples g_p until the order
// condition holds, unless a forced base is supplied (then it must hold).
KeyPair assemble(const BigInt& p, const BigInt& q, SeededRng& rng, const BigInt* forced_g_p) {
    if (p == q) {
        throw ParameterSpace("keygen: p and q must be distinct");
    }
    const BigInt n = p * q;
    const BigInt n_sq = n * n;
    const BigInt lambda = pailab::lcm(p - 1, q - 1);

    BigInt g_p;
    BigInt l_val;
    for (;;) {
        if (forced_g_p != nullptr) {
            g_p = *forced_g_p;
            if (g_p <= 1 || g_p >= n_sq || gcd(g_p, n) != 1) {
                throw ParameterSpace("keygen: forced g_p is not a unit in (1, N^2)");
            }
        } else {
            g_p = 1 + rng.uniform_below(n_sq - 1);
            if (gcd(g_p, n) != 1) {
                continue;
            }
        }
        l_val = l_function(powm(g_p, lambda, n_sq), n);
        if (gcd(l_val, n) == 1 && l_val != 0) {
            break;
        }
        if (forced_g_p != nullptr) {
            throw ParameterSpace("keygen: forced g_p has order not a multiple of N");
        }
    }

    PublicDecryptionKey pk;
    pk.n = n;
    pk.n_sq = n_sq;
    pk.g_p = g_p;
    pk.mu = mod_inv(l_val, n);
    pk.fp = modulus_fingerprint(n);

    SecretEncryptionKey sk;
    sk.lambda = lambda;
    sk.p = p;
    sk.q = q;
    return {pk, sk};
}

}  // namespace

KeyPair keygen(std::size_t bits, SeededRng& rng) {
    if (bits < 6) {
        throw ParameterSpace("keygen: need at least 6 modulus bits");
    }
    const std::size_t p_bits = bits - bits / 2;
    const std::size_t q_bits = bits / 2;
    for (;;) {
        const BigInt p = gen_prime(p_bits, rng);
        BigInt q = gen_prime(q_bits, rng);
        while (q == p) {
            q = gen_prime(q_bits, rng);
        }
        // The product of two half-width primes can fall one bit short of
        // the requested size; resample in that case.
        if (bit_length(p * q) != bits) {
            continue;
        }
        return assemble(p, q, rng, nullptr);
    }
}

KeyPair keygen_from_primes(const BigInt& p, const BigInt& q, SeededRng& rng,
                           const BigInt* forced_g_p) {
    if (!is_probable_prime(p, rng) || !is_probable_prime(q, rng)) {
        throw ParameterSpace("keygen: both factors must be prime");
    }
    return assemble(p, q, rng, forced_g_p);
}

Ciphertext encrypt(const BigInt& m, const BigInt& r, const SecretEncryptionKey& sk,
                   const PublicDecryptionKey& pk) {
    if (sk.p * sk.q != pk.n) {
        throw KeyMismatch("encrypt: secret key does not belong to this public key");
    }
    const BigInt r_mod = mod_reduce(r, pk.n);
    if (r_mod == 0 || gcd(r_mod, pk.n) != 1) {
        throw NotInvertible("encrypt: randomizer r must be a unit mod N");
    }
    const BigInt m_can = mod_reduce(m, pk.n);
    const BigInt left = powm(pk.g_p, BigInt(m_can * sk.lambda), pk.n_sq);
    const BigInt right = powm(r_mod, BigInt(pk.n * sk.lambda), pk.n_sq);
    return Ciphertext{left * right % pk.n_sq, pk.n_sq, pk.fp};
}

BigInt decrypt(const Ciphertext& c, const PublicDecryptionKey& pk) {
    if (c.key_fp != pk.fp) {
        throw KeyMismatch("decrypt: ciphertext was produced under a different key");
    }
    return mod_reduce(l_function(c.value, pk.n) * pk.mu, pk.n);
}

Ciphertext hom_add(const Ciphertext& c1, const Ciphertext& c2) {
    if (c1.key_fp != c2.key_fp) {
        throw KeyMismatch("hom_add: ciphertexts under different keys");
    }
    return Ciphertext{c1.value * c2.value % c1.n_sq, c1.n_sq, c1.key_fp};
}

Ciphertext hom_scale(const Ciphertext& c, const BigInt& k) {
    return Ciphertext{mod_pow_signed(c.value, k, c.n_sq), c.n_sq, c.key_fp};
}

Ciphertext ciphertext_from_value(const BigInt& value, const PublicDecryptionKey& pk) {
    if (value <= 0 || value >= pk.n_sq) {
        throw DomainViolation("ciphertext_from_value: value outside [1, N^2)");
    }
    return Ciphertext{value, pk.n_sq, pk.fp};
}

}  // namespace pailab
