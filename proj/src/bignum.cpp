#include "pailab/bignum.hpp"

#include "pailab/errors.hpp"

#include <ios>
#include <stdexcept>

namespace pailab {

std::string to_hex(const BigInt& v) {
    if (v < 0) {
        throw std::invalid_argument("to_hex: negative value");
    }
    return v.str(0, std::ios_base::hex);
}

BigInt from_hex(const std::string& hex) {
    if (hex.empty()) {
        throw std::invalid_argument("from_hex: empty string");
    }
    return BigInt("0x" + hex);
}

std::uint64_t modulus_fingerprint(const BigInt& n) {
    const std::string hex = to_hex(n);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : hex) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

BigInt mod_reduce(const BigInt& v, const BigInt& n) {
    if (n <= 0) {
        throw ParameterSpace("mod_reduce: modulus must be positive");
    }
    BigInt r = v % n;
    if (r < 0) {
        r += n;
    }
    return r;
}

std::size_t bit_length(const BigInt& v) {
    if (v == 0) {
        return 0;
    }
    return boost::multiprecision::msb(v) + 1;
}

BigInt SeededRng::uniform_bits(std::size_t bits) {
    if (bits == 0) {
        return 0;
    }
    BigInt x = 0;
    const std::size_t words = (bits + 63) / 64;
    for (std::size_t i = 0; i < words; ++i) {
        x <<= 64;
        x |= BigInt(gen_());
    }
    const std::size_t excess = words * 64 - bits;
    if (excess > 0) {
        x >>= excess;
    }
    return x;
}

BigInt SeededRng::uniform_below(const BigInt& bound) {
    if (bound < 1) {
        throw ParameterSpace("uniform_below: bound must be at least 1");
    }
    const std::size_t k = bit_length(bound);
    for (;;) {
        BigInt x = uniform_bits(k);
        if (x < bound) {
            return x;
        }
    }
}

BigInt SeededRng::uniform_range(const BigInt& lo, const BigInt& hi) {
    if (lo > hi) {
        throw ParameterSpace("uniform_range: empty range");
    }
    return lo + uniform_below(hi - lo + 1);
}

BigInt SeededRng::uniform_unit(const BigInt& n) {
    if (n < 2) {
        throw ParameterSpace("uniform_unit: modulus must exceed 1");
    }
    for (;;) {
        BigInt x = uniform_below(n);
        if (x != 0 && gcd(x, n) == 1) {
            return x;
        }
    }
}

}  // namespace pailab
