#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <random>
#include <string>

namespace pailab {

using BigInt = boost::multiprecision::mpz_int;

// Lowercase big-endian hex without leading zeros; "0" for zero.
// Rejects negative values, which never appear on the wire.
std::string to_hex(const BigInt& v);
BigInt from_hex(const std::string& hex);

// 64-bit FNV-1a digest of the hex form of n. Ciphertexts are stamped with
// the digest of their modulus so cross-key arithmetic fails loudly.
std::uint64_t modulus_fingerprint(const BigInt& n);

// Canonical representative of v mod n in [0, n). Unlike operator%, this
// is well behaved for negative v.
BigInt mod_reduce(const BigInt& v, const BigInt& n);

// Number of significant bits; bit_length(0) == 0.
std::size_t bit_length(const BigInt& v);

// Deterministic random source. Identical seed gives an identical stream on
// every platform (mt19937_64's output is pinned by the standard), which is
// what makes scenario transcripts reproducible. Single owner: never share
// one instance between threads.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 2^bits).
    BigInt uniform_bits(std::size_t bits);

    // Uniform in [0, bound), bound >= 1, by rejection sampling.
    BigInt uniform_below(const BigInt& bound);

    // Uniform in [lo, hi], inclusive.
    BigInt uniform_range(const BigInt& lo, const BigInt& hi);

    // Uniform over the units of Z_n: [1, n) and coprime to n.
    BigInt uniform_unit(const BigInt& n);

private:
    std::mt19937_64 gen_;
};

}  // namespace pailab
