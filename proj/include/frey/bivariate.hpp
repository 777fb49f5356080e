#pragma once

// Bivariate polynomials in the formal variables (a, b) with coefficients in Z[zeta].

#include "frey/cyclotomic.hpp"
#include "frey/residue_field.hpp"

#include <map>
#include <utility>
#include <vector>

namespace frey {

class BivariatePoly {
public:
    using Exponents = std::pair<unsigned, unsigned>; ///< (deg in a, deg in b)

    BivariatePoly() = default;
    static BivariatePoly constant(const CyclotomicInt& c);
    static BivariatePoly monomial(const CyclotomicInt& c, unsigned da, unsigned db);

    void add_term(unsigned da, unsigned db, const CyclotomicInt& c);
    const std::map<Exponents, CyclotomicInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    BivariatePoly& operator+=(const BivariatePoly& o);
    BivariatePoly& operator-=(const BivariatePoly& o);
    friend BivariatePoly operator+(BivariatePoly x, const BivariatePoly& y) { return x += y; }
    friend BivariatePoly operator-(BivariatePoly x, const BivariatePoly& y) { return x -= y; }
    friend BivariatePoly operator*(const BivariatePoly& x, const BivariatePoly& y);
    friend BivariatePoly operator*(const CyclotomicInt& c, const BivariatePoly& x);
    friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

    /// Exact value at integer (a, b).
    CyclotomicInt evaluate(const mpz_class& a, const mpz_class& b) const;

    /// Applies sigma_j to every coefficient.
    BivariatePoly galois(unsigned j) const;

private:
    std::map<Exponents, CyclotomicInt> terms_; ///< no zero coefficients stored
};

/// A bivariate polynomial with coefficients already reduced into a residue field.
struct ReducedBivariate {
    struct Term {
        unsigned da, db;
        FieldElem c;
    };
    std::vector<Term> terms;

    /// Value at residues (a, b) in F_q, embedded in the field.
    FieldElem evaluate(const ResidueField& field, std::uint64_t a, std::uint64_t b) const;
};

} // namespace frey
