#pragma once

// Exact arithmetic in Z[zeta], zeta a primitive 13th root of unity, and the
// conductor-13 subfields used by the Frey curves.

#include <array>
#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <string_view>
#include <vector>

namespace frey {

inline constexpr unsigned kConductor = 13;
inline constexpr unsigned kDegree = 12;

/// Element of Z[zeta] in the power basis 1, zeta, ..., zeta^11.
class CyclotomicInt {
public:
    using Coords = std::array<mpz_class, kDegree>;

    CyclotomicInt() = default;
    explicit CyclotomicInt(const Coords& coords) : coords_(coords) {}
    CyclotomicInt(long n) { coords_[0] = n; } // NOLINT: integers embed implicitly
    explicit CyclotomicInt(const mpz_class& n) { coords_[0] = n; }

    static CyclotomicInt zeta();
    static CyclotomicInt zeta_power(long k);
    /// From coefficients of 1, zeta, ..., zeta^(n-1) with any n (reduced modulo Phi_13).
    static CyclotomicInt from_power_coeffs(const std::vector<mpz_class>& coeffs);

    const Coords& coords() const { return coords_; }
    const mpz_class& operator[](std::size_t i) const { return coords_[i]; }

    bool is_zero() const;
    bool is_rational() const; ///< all coordinates except the constant vanish

    CyclotomicInt& operator+=(const CyclotomicInt& o);
    CyclotomicInt& operator-=(const CyclotomicInt& o);
    CyclotomicInt& operator*=(const CyclotomicInt& o);
    CyclotomicInt operator-() const;

    friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
    friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
    friend CyclotomicInt operator*(CyclotomicInt a, const CyclotomicInt& b) { return a *= b; }
    friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) { return a.coords_ == b.coords_; }

    CyclotomicInt pow(unsigned e) const;

    /// sigma_j: zeta -> zeta^j for j in (Z/13)^x.
    CyclotomicInt galois(unsigned j) const;

    /// Absolute norm to Q (product of all twelve conjugates).
    mpz_class norm() const;

    /// Exact quotient this / d; throws std::domain_error if d does not divide.
    CyclotomicInt exact_div(const CyclotomicInt& d) const;

    /// Comma-separated list of the 12 coordinates.
    std::string to_string() const;
    static CyclotomicInt parse(std::string_view text);

private:
    Coords coords_{};
};

enum class Subfield { full, quadratic, cubic };

std::string_view subfield_name(Subfield s);
Subfield parse_subfield(std::string_view name);

/// Degree over Q: 12, 2 or 3.
unsigned subfield_degree(Subfield s);

/// Subgroup of (Z/13)^x fixing the subfield.
std::vector<unsigned> subfield_fixing_group(Subfield s);

/// One representative j of each coset of the fixing group, smallest first.
std::vector<unsigned> subfield_coset_representatives(Subfield s);

bool lies_in(const CyclotomicInt& x, Subfield s);

/// Generator of the ring of integers: zeta (full), (1 + sqrt13)/2 (quadratic),
/// eta = zeta + zeta^5 + zeta^8 + zeta^12 (cubic).
CyclotomicInt subfield_generator(Subfield s);

/// Gauss sum sum_j (j|13) zeta^j, a square root of 13.
CyclotomicInt sqrt13();

/// Minimal polynomial of the subfield generator over Z, constant term first, monic.
std::vector<mpz_class> subfield_minimal_polynomial(Subfield s);

/// Coordinates of a subfield element on the basis 1, theta, ..., theta^(d-1) of the
/// subfield generator theta. Throws std::domain_error if x is not in Z[theta].
std::vector<mpz_class> subfield_coordinates(const CyclotomicInt& x, Subfield s);

} // namespace frey
