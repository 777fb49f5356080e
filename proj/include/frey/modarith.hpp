#pragma once

// Word-size modular arithmetic helpers shared by the residue-field and
// sieve code. All moduli are small primes (well below 2^32).

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace frey {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw std::domain_error("invmod: zero has no inverse");
    return powmod(a, p - 2, p);
}

/// Reduces a signed integer into [0, m).
inline std::uint64_t to_residue(std::int64_t x, std::uint64_t m) {
    std::int64_t r = x % static_cast<std::int64_t>(m);
    if (r < 0) r += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(r);
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    if (bound < 2) return out;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
}

/// Multiplicative order of a modulo m; requires gcd(a, m) = 1.
inline unsigned multiplicative_order(std::uint64_t a, std::uint64_t m) {
    a %= m;
    if (a == 0) throw std::domain_error("multiplicative_order: not a unit");
    std::uint64_t x = a;
    unsigned k = 1;
    while (x != 1 % m) {
        x = mulmod(x, a, m);
        ++k;
        if (k > m) throw std::domain_error("multiplicative_order: not a unit");
    }
    return k;
}

/// q^f, or throws std::overflow_error when the result does not fit in 63 bits.
using WideOrder = unsigned __int128;

/// q^f, which must stay below 2^126.
inline WideOrder wide_pow(std::uint64_t q, unsigned f) {
    WideOrder n = 1;
    for (unsigned i = 0; i < f; ++i) {
        if (n >= (static_cast<WideOrder>(1) << 126) / q) throw std::overflow_error("wide_pow: q^f exceeds 2^126");
        n *= q;
    }
    return n;
}

inline std::uint64_t checked_pow(std::uint64_t q, unsigned f) {
    unsigned __int128 n = 1;
    for (unsigned i = 0; i < f; ++i) {
        n *= q;
        if (n >= (static_cast<unsigned __int128>(1) << 63)) {
            throw std::overflow_error("checked_pow: q^f exceeds 2^63");
        }
    }
    return static_cast<std::uint64_t>(n);
}

} // namespace frey
