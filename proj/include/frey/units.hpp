#pragma once

// Units of Z[zeta] modulo 7th powers.
//
// Classes are exponent vectors (e2, ..., e6) in (Z/7)^5 over the cyclotomic
// units u_k = (1 - zeta^k)/(1 - zeta) = 1 + zeta + ... + zeta^(k-1). The
// torsion subgroup <-zeta> has order 26, prime to 7, so it lies in the 7th
// powers and is invisible to the class map.

#include "frey/cyclotomic.hpp"
#include "frey/primes.hpp"
#include "frey/residue_field.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace frey {

inline constexpr unsigned kUnitRank = 5;
inline constexpr unsigned kUnitClassCount = 16807; // 7^5

struct UnitClass {
    std::array<std::uint8_t, kUnitRank> e{};

    /// Position in the lexicographic enumeration (e2 most significant).
    std::uint32_t index() const;
    static UnitClass from_index(std::uint32_t idx);

    /// Base-7 digits "e2e3e4e5e6".
    std::string to_string() const;
    static UnitClass parse(const std::string& digits);

    friend bool operator==(const UnitClass&, const UnitClass&) = default;
    friend auto operator<=>(const UnitClass&, const UnitClass&) = default;
};

UnitClass operator+(const UnitClass& a, const UnitClass& b);

/// All 7^5 classes in lexicographic order; the first is the trivial class.
std::vector<UnitClass> unit_class_enumerate();

/// The five generators u_2, ..., u_6 (or a user override).
class UnitBasis {
public:
    UnitBasis(); ///< cyclotomic units
    /// Throws std::invalid_argument unless there are five generators of norm +-1.
    explicit UnitBasis(std::vector<CyclotomicInt> generators);

    const std::vector<CyclotomicInt>& generators() const { return generators_; }

    /// prod u_k^(e_k) with exponents in 0..6.
    CyclotomicInt value(const UnitClass& u) const;

private:
    std::vector<CyclotomicInt> generators_;
};

CyclotomicInt cyclotomic_unit(unsigned k);

/// A full-field prime with 7 | N - 1 whose 7th-power character is used as a
/// linear functional on units modulo 7th powers.
struct CharacterPrime {
    PrimeSplitting split;
    std::size_t index = 0;
    ResidueField field;

    std::string label() const { return split.labels[index]; }
    unsigned character(const CyclotomicInt& x) const; ///< x must be nonzero at the prime
};

/// Discrete-log map units -> (Z/7)^5 via 7th-power-residue characters at
/// auxiliary primes, inverted against the generator basis.
class UnitLogMap {
public:
    struct Options {
        std::vector<std::uint64_t> exclude{2, 11, 19, 23, 83}; ///< sieve primes
        std::vector<std::uint64_t> primes;                     ///< explicit list overrides the search
        std::uint64_t search_bound = 2000;
        unsigned prime_budget = 40;
    };

    /// Throws std::runtime_error if no invertible 5x5 character matrix is found
    /// within the budget (the generators are then dependent modulo 7th powers).
    explicit UnitLogMap(const UnitBasis& basis);
    UnitLogMap(const UnitBasis& basis, Options options);

    /// Exponent vector e with x = prod u_k^(e_k) modulo 7th powers; x must be a unit.
    UnitClass class_of(const CyclotomicInt& x) const;

    const std::vector<CharacterPrime>& primes() const { return primes_; }
    /// Row r holds the characters of u_2..u_6 at primes()[r].
    const std::array<std::array<unsigned, kUnitRank>, kUnitRank>& matrix() const { return matrix_; }

private:
    std::vector<CharacterPrime> primes_;
    std::array<std::array<unsigned, kUnitRank>, kUnitRank> matrix_{};
    std::array<std::array<unsigned, kUnitRank>, kUnitRank> inverse_{};
};

/// Rank over F_7 of a matrix with entries in 0..6.
unsigned rank_mod7(std::vector<std::vector<unsigned>> rows);

struct Epsilon0 {
    CyclotomicInt value; ///< 13^4 / (1 - zeta)^48
    UnitClass cls;
};

/// 13^4 / (1 - zeta)^48 by exact division.
CyclotomicInt epsilon0_value();
Epsilon0 epsilon0(const UnitLogMap& logs);

/// Checks 13^4 - 13^4 zeta == eps * (1 - zeta)^49 exactly.
bool epsilon0_identity_holds(const CyclotomicInt& eps);

} // namespace frey
