#include "pailab/modmath.hpp"

#include "pailab/errors.hpp"

#include <array>
#include <vector>

namespace pailab {

namespace {

// Primes below 1000. Sieved once; used to shortcut obvious composites
// before the expensive Miller-Rabin rounds.
const std::vector<unsigned>& small_primes() {
    static const std::vector<unsigned> primes = [] {
        constexpr unsigned limit = 1000;
        std::array<bool, limit> composite{};
        std::vector<unsigned> out;
        for (unsigned i = 2; i < limit; ++i) {
            if (composite[i]) {
                continue;
            }
            out.push_back(i);
            for (unsigned j = 2 * i; j < limit; j += i) {
                composite[j] = true;
            }
        }
        return out;
    }();
    return primes;
}

}  // namespace

bool is_probable_prime(const BigInt& n, SeededRng& rng, int rounds) {
    if (n < 2) {
        return false;
    }
    for (unsigned p : small_primes()) {
        if (n == p) {
            return true;
        }
        if (n % p == 0) {
            return false;
        }
    }

    // n is odd and larger than every sieve prime. Write n - 1 = d * 2^s.
    BigInt d = n - 1;
    std::size_t s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }

    const BigInt n_minus_1 = n - 1;
    for (int round = 0; round < rounds; ++round) {
        const BigInt a = rng.uniform_range(2, n - 2);
        BigInt x = powm(a, d, n);
        if (x == 1 || x == n_minus_1) {
            continue;
        }
        bool witness = true;
        for (std::size_t i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n_minus_1) {
                witness = false;
                break;
            }
        }
        if (witness) {
            return false;
        }
    }
    return true;
}

BigInt gen_prime(std::size_t bits, SeededRng& rng) {
    if (bits < 3) {
        throw ParameterSpace("gen_prime: need at least 3 bits");
    }
    const BigInt top = BigInt(1) << (bits - 1);
    for (;;) {
        // Force the top bit for exact width and the low bit for oddness;
        // the middle bits are uniform.
        BigInt candidate = top | (rng.uniform_bits(bits - 2) << 1) | 1;
        if (is_probable_prime(candidate, rng)) {
            return candidate;
        }
    }
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a <= 0 || b <= 0) {
        throw ParameterSpace("lcm: arguments must be positive");
    }
    return BigInt(a * b) / gcd(a, b);
}

BigInt mod_inv(const BigInt& a, const BigInt& n) {
    if (n <= 1) {
        throw ParameterSpace("mod_inv: modulus must exceed 1");
    }
    BigInt r0 = n;
    BigInt r1 = mod_reduce(a, n);
    BigInt t0 = 0;
    BigInt t1 = 1;
    while (r1 != 0) {
        const BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        BigInt t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) {
        throw NotInvertible("mod_inv: gcd(a, n) = " + r0.str());
    }
    return mod_reduce(t0, n);
}

BigInt mod_pow_signed(const BigInt& base, const BigInt& exp, const BigInt& n) {
    if (n <= 1) {
        throw ParameterSpace("mod_pow_signed: modulus must exceed 1");
    }
    if (exp < 0) {
        const BigInt inv = mod_inv(base, n);
        const BigInt e = -exp;
        return powm(inv, e, n);
    }
    return powm(mod_reduce(base, n), exp, n);
}

BigInt l_function(const BigInt& x, const BigInt& n) {
    if (n <= 1) {
        throw ParameterSpace("l_function: modulus must exceed 1");
    }
    if (x < 0 || x >= n * n) {
        throw DomainViolation("l_function: input outside [0, N^2)");
    }
    const BigInt shifted = x - 1;
    if (shifted % n != 0) {
        throw DomainViolation("l_function: input not congruent to 1 mod N");
    }
    return shifted / n;
}

}  // namespace pailab
