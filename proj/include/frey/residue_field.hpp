#pragma once

// Finite field F_q[t]/(h) with h monic irreducible of degree f <= 12 and
// q^f < 2^126. Element indexing needs q^f < 2^63. Elements are coordinate vectors on 1, t, ..., t^(f-1).

#include "frey/modarith.hpp"
#include "frey/polyfq.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace frey {

struct FieldElem {
    std::array<std::uint32_t, 12> c{};
    friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

class ResidueField {
public:
    /// `modulus` must be monic irreducible over F_q; irreducibility is the caller's contract.
    ResidueField(std::uint64_t q, PolyFq modulus);

    std::uint64_t characteristic() const { return q_; }
    unsigned degree() const { return f_; }
    std::uint64_t size() const; ///< q^f; throws std::overflow_error past 2^63
    WideOrder order() const { return order_; }
    const PolyFq& modulus() const { return modulus_; }

    FieldElem zero() const { return {}; }
    FieldElem one() const;
    FieldElem from_int(std::int64_t n) const;
    FieldElem from_poly(const PolyFq& p) const; ///< reduces p modulo the modulus
    FieldElem generator_t() const;              ///< the class of t

    bool is_zero(const FieldElem& x) const;

    FieldElem add(const FieldElem& x, const FieldElem& y) const;
    FieldElem sub(const FieldElem& x, const FieldElem& y) const;
    FieldElem neg(const FieldElem& x) const;
    FieldElem mul(const FieldElem& x, const FieldElem& y) const;
    FieldElem scale(const FieldElem& x, std::uint64_t s) const;
    FieldElem pow(FieldElem x, WideOrder e) const;
    FieldElem inv(const FieldElem& x) const; ///< throws on zero

    /// Bijection with [0, q^f): coordinates read as base-q digits.
    std::uint64_t index(const FieldElem& x) const;
    FieldElem element(std::uint64_t idx) const;

    /// True iff x is a 7th power; x must be nonzero.
    bool is_seventh_power(const FieldElem& x) const;

    /// True iff 7 divides q^f - 1 (the 7th-power test is non-trivial).
    bool has_seventh_roots() const { return (order_ - 1) % 7 == 0; }

    /// Discrete logarithm in Z/7 of x^((q^f-1)/7) against a fixed primitive
    /// 7th root of unity; a homomorphism F^x -> Z/7 whose kernel is the 7th powers.
    /// Requires has_seventh_roots() and x nonzero.
    unsigned seventh_power_character(const FieldElem& x) const;

    std::string to_string(const FieldElem& x) const;

private:
    std::uint64_t q_;
    unsigned f_;
    WideOrder order_;
    PolyFq modulus_;
    std::array<FieldElem, 7> seventh_roots_{}; ///< w^k for the fixed root w
};

} // namespace frey
