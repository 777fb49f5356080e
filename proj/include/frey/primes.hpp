#pragma once

// Splitting of rational primes in Q(zeta_13) and its quadratic and cubic
// subfields, residue-field models, and reduction maps.
//
// Primes above q are labelled "q.1", ..., "q.g" following the lexicographic
// order (constant coefficient first) of the monic factors of the defining
// polynomial modulo q: Phi_13 for the full field, the minimal polynomial of
// the subfield generator otherwise.

#include "frey/cyclotomic.hpp"
#include "frey/polyfq.hpp"
#include "frey/residue_field.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace frey {

struct PrimeSplitting {
    std::uint64_t q = 0;
    Subfield subfield = Subfield::full;
    unsigned f = 0; ///< residue degree
    unsigned g = 0; ///< number of primes above q
    unsigned e = 1; ///< ramification index (> 1 only for q = 13)
    bool ramified = false;
    std::vector<PolyFq> factors;
    std::vector<std::string> labels;

    std::uint64_t norm() const; ///< q^f (throws if it overflows 63 bits)
    std::size_t index_of(const std::string& label) const; ///< throws std::out_of_range
    ResidueField residue_field(std::size_t i) const;
};

/// Throws std::invalid_argument for non-prime q.
PrimeSplitting split_prime(std::uint64_t q, Subfield subfield);

/// Residue degree of q in the given subfield (q != 13).
unsigned residue_degree(std::uint64_t q, Subfield subfield);

/// Reduction of a subfield element at prime i of the splitting: the element is
/// written on the generator's power basis and the generator is sent to t.
/// For the full field this is the reduction zeta -> t of Z[zeta].
FieldElem reduce_mod_prime(const CyclotomicInt& x, const PrimeSplitting& split, std::size_t i,
                           const ResidueField& field);
FieldElem reduce_mod_prime(const CyclotomicInt& x, const PrimeSplitting& split, const std::string& label);

/// Reduction of an element given on the subfield generator's power basis.
FieldElem reduce_coordinates(const std::vector<mpz_class>& coords, const ResidueField& field);

/// Index j of the prime of `sub` lying below prime `i` of the full-field splitting
/// `full` (same q): the one whose factor vanishes at the image of the generator.
std::size_t prime_below(const PrimeSplitting& full, std::size_t i, const PrimeSplitting& sub);

/// Image of a subfield residue at `sub_index` inside the residue field of the
/// full-field prime `full_index` lying above it.
FieldElem embed_residue(const FieldElem& x, const PrimeSplitting& sub, std::size_t sub_index,
                        const PrimeSplitting& full, std::size_t full_index);

/// All primes q <= bound, q != 13, with 7 | q^f - 1 where f is the order of q mod 13.
std::vector<std::uint64_t> find_sieve_primes(std::uint64_t bound);

} // namespace frey
