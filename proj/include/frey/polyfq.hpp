#pragma once

// Dense univariate polynomials over a prime field F_q, coefficients stored
// constant term first. Used to factor defining polynomials modulo q and to
// model residue fields as F_q[t]/(h).

#include <cstdint>
#include <vector>

namespace frey {

using PolyFq = std::vector<std::uint64_t>;

namespace polyfq {

void trim(PolyFq& a);
int degree(const PolyFq& a); ///< -1 for the zero polynomial

PolyFq add(const PolyFq& a, const PolyFq& b, std::uint64_t q);
PolyFq sub(const PolyFq& a, const PolyFq& b, std::uint64_t q);
PolyFq mul(const PolyFq& a, const PolyFq& b, std::uint64_t q);
void divmod(const PolyFq& a, const PolyFq& b, std::uint64_t q, PolyFq& quot, PolyFq& rem);
PolyFq mod(const PolyFq& a, const PolyFq& m, std::uint64_t q);
PolyFq monic(const PolyFq& a, std::uint64_t q);
PolyFq gcd(PolyFq a, PolyFq b, std::uint64_t q);
PolyFq derivative(const PolyFq& a, std::uint64_t q);

/// base^e mod m, where the exponent is given as little-endian 64-bit limbs.
PolyFq powmod(const PolyFq& base, const std::vector<std::uint64_t>& exp_limbs, const PolyFq& m,
              std::uint64_t q);

std::uint64_t eval(const PolyFq& a, std::uint64_t x, std::uint64_t q);

/// Splits a squarefree monic polynomial whose irreducible factors all have
/// degree `factor_degree` (Cantor-Zassenhaus, deterministic seed). The result
/// is sorted lexicographically by coefficient list, constant term first.
std::vector<PolyFq> equal_degree_factors(const PolyFq& f, unsigned factor_degree, std::uint64_t q);

bool lex_less(const PolyFq& a, const PolyFq& b);

} // namespace polyfq
} // namespace frey
