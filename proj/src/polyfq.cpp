#include "frey/polyfq.hpp"

#include "frey/modarith.hpp"

#include <algorithm>
#include <gmpxx.h>
#include <random>
#include <stdexcept>

namespace frey::polyfq {

void trim(PolyFq& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const PolyFq& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
        if (a[static_cast<std::size_t>(i)] != 0) return i;
    }
    return -1;
}

PolyFq add(const PolyFq& a, const PolyFq& b, std::uint64_t q) {
    PolyFq r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % q;
    trim(r);
    return r;
}

PolyFq sub(const PolyFq& a, const PolyFq& b, std::uint64_t q) {
    PolyFq r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + q - b[i] % q) % q;
    trim(r);
    return r;
}

PolyFq mul(const PolyFq& a, const PolyFq& b, std::uint64_t q) {
    if (a.empty() || b.empty()) return {};
    PolyFq r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = (r[i + j] + mulmod(a[i], b[j], q)) % q;
        }
    }
    trim(r);
    return r;
}

void divmod(const PolyFq& a, const PolyFq& b, std::uint64_t q, PolyFq& quot, PolyFq& rem) {
    const int db = degree(b);
    if (db < 0) throw std::domain_error("polyfq::divmod: division by zero polynomial");
    rem = a;
    trim(rem);
    const std::uint64_t lead_inv = invmod(b[static_cast<std::size_t>(db)], q);
    int dr = degree(rem);
    quot.assign(dr >= db ? static_cast<std::size_t>(dr - db + 1) : 0, 0);
    while (dr >= db) {
        const std::uint64_t c = mulmod(rem[static_cast<std::size_t>(dr)], lead_inv, q);
        const std::size_t shift = static_cast<std::size_t>(dr - db);
        quot[shift] = c;
        for (int i = 0; i <= db; ++i) {
            auto& slot = rem[shift + static_cast<std::size_t>(i)];
            slot = (slot + q - mulmod(c, b[static_cast<std::size_t>(i)], q)) % q;
        }
        trim(rem);
        dr = degree(rem);
    }
    trim(quot);
}

PolyFq mod(const PolyFq& a, const PolyFq& m, std::uint64_t q) {
    PolyFq quot, rem;
    divmod(a, m, q, quot, rem);
    return rem;
}

PolyFq monic(const PolyFq& a, std::uint64_t q) {
    PolyFq r = a;
    trim(r);
    if (r.empty()) return r;
    const std::uint64_t inv = invmod(r.back(), q);
    for (auto& c : r) c = mulmod(c, inv, q);
    return r;
}

PolyFq gcd(PolyFq a, PolyFq b, std::uint64_t q) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        PolyFq r = mod(a, b, q);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, q);
}

PolyFq derivative(const PolyFq& a, std::uint64_t q) {
    if (a.size() <= 1) return {};
    PolyFq r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mulmod(a[i], i % q, q);
    trim(r);
    return r;
}

PolyFq powmod(const PolyFq& base, const std::vector<std::uint64_t>& exp_limbs, const PolyFq& m,
              std::uint64_t q) {
    PolyFq result{1 % q};
    trim(result);
    PolyFq b = mod(base, m, q);
    for (std::uint64_t limb : exp_limbs) {
        for (int bit = 0; bit < 64; ++bit) {
            if (limb & 1) result = mod(mul(result, b, q), m, q);
            b = mod(mul(b, b, q), m, q);
            limb >>= 1;
        }
    }
    return result;
}

std::uint64_t eval(const PolyFq& a, std::uint64_t x, std::uint64_t q) {
    std::uint64_t r = 0;
    for (std::size_t i = a.size(); i-- > 0;) r = (mulmod(r, x, q) + a[i]) % q;
    return r;
}

bool lex_less(const PolyFq& a, const PolyFq& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

std::vector<std::uint64_t> to_limbs(const mpz_class& n) {
    std::vector<std::uint64_t> limbs;
    mpz_class x = n;
    const mpz_class base = mpz_class(1) << 64;
    while (x > 0) {
        mpz_class r = x % base;
        std::uint64_t lo = 0;
        mpz_export(&lo, nullptr, -1, sizeof(lo), 0, 0, r.get_mpz_t());
        limbs.push_back(lo);
        x /= base;
    }
    return limbs;
}

void split_recursive(const PolyFq& f, unsigned d, std::uint64_t q, std::mt19937_64& rng,
                     std::vector<PolyFq>& out) {
    const int n = degree(f);
    if (n <= static_cast<int>(d)) {
        out.push_back(monic(f, q));
        return;
    }
    mpz_class qd;
    mpz_ui_pow_ui(qd.get_mpz_t(), q, d);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        PolyFq a(static_cast<std::size_t>(n));
        for (auto& c : a) c = rng() % q;
        trim(a);
        if (degree(a) < 1) continue;
        PolyFq h;
        if (q == 2) {
            // Absolute trace a + a^2 + ... + a^(2^(d-1)) splits F_(2^d) into halves.
            PolyFq t = mod(a, f, q);
            h = t;
            for (unsigned i = 1; i < d; ++i) {
                t = mod(mul(t, t, q), f, q);
                h = add(h, t, q);
            }
        } else {
            const mpz_class e = (qd - 1) / 2;
            h = sub(powmod(a, to_limbs(e), f, q), PolyFq{1}, q);
        }
        PolyFq g = gcd(f, h, q);
        const int dg = degree(g);
        if (dg > 0 && dg < n) {
            PolyFq quot, rem;
            divmod(f, g, q, quot, rem);
            split_recursive(g, d, q, rng, out);
            split_recursive(monic(quot, q), d, q, rng, out);
            return;
        }
    }
    throw std::runtime_error("equal_degree_factors: failed to split");
}

} // namespace

std::vector<PolyFq> equal_degree_factors(const PolyFq& f, unsigned factor_degree, std::uint64_t q) {
    if (factor_degree == 0 || degree(f) % static_cast<int>(factor_degree) != 0) {
        throw std::invalid_argument("equal_degree_factors: degree mismatch");
    }
    std::mt19937_64 rng(0x13137ULL);
    std::vector<PolyFq> out;
    split_recursive(monic(f, q), factor_degree, q, rng, out);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

} // namespace frey::polyfq
