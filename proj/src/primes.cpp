#include "frey/primes.hpp"

#include "frey/modarith.hpp"

#include <algorithm>
#include <stdexcept>

namespace frey {

std::uint64_t PrimeSplitting::norm() const { return checked_pow(q, f); }

std::size_t PrimeSplitting::index_of(const std::string& label) const {
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) {
        throw std::out_of_range("prime label '" + label + "' not above " + std::to_string(q) + " in the " +
                                std::string(subfield_name(subfield)) + " field");
    }
    return static_cast<std::size_t>(it - labels.begin());
}

ResidueField PrimeSplitting::residue_field(std::size_t i) const { return ResidueField(q, factors.at(i)); }

unsigned residue_degree(std::uint64_t q, Subfield subfield) {
    if (q % kConductor == 0) throw std::invalid_argument("residue_degree: q = 13 is ramified");
    const auto group = subfield_fixing_group(subfield);
    std::uint64_t x = q % kConductor;
    for (unsigned f = 1; f <= kDegree; ++f) {
        if (std::find(group.begin(), group.end(), x) != group.end()) return f;
        x = x * (q % kConductor) % kConductor;
    }
    throw std::logic_error("residue_degree: no power of q lies in the fixing group");
}

PrimeSplitting split_prime(std::uint64_t q, Subfield subfield) {
    if (!is_prime(q)) throw std::invalid_argument("split_prime: " + std::to_string(q) + " is not prime");
    PrimeSplitting s;
    s.q = q;
    s.subfield = subfield;
    const unsigned n = subfield_degree(subfield);

    if (q == kConductor) {
        const CyclotomicInt theta = subfield_generator(subfield);
        mpz_class root = 0;
        for (const auto& c : theta.coords()) root += c; // zeta = 1 modulo the prime above 13
        const std::uint64_t r = mpz_class(((root % 13) + 13) % 13).get_ui();
        s.ramified = true;
        s.e = n;
        s.f = 1;
        s.g = 1;
        s.factors.push_back(PolyFq{(q - r) % q, 1});
        s.labels.push_back(std::to_string(q) + ".1");
        return s;
    }

    PolyFq m;
    for (const auto& c : subfield_minimal_polynomial(subfield)) {
        mpz_class r = c % static_cast<unsigned long>(q);
        if (r < 0) r += q;
        m.push_back(r.get_ui());
    }
    s.f = residue_degree(q, subfield);
    s.g = n / s.f;
    s.factors = polyfq::equal_degree_factors(m, s.f, q);
    if (s.factors.size() != s.g) throw std::logic_error("split_prime: factor count mismatch");
    for (unsigned i = 0; i < s.g; ++i) s.labels.push_back(std::to_string(q) + "." + std::to_string(i + 1));
    return s;
}

FieldElem reduce_coordinates(const std::vector<mpz_class>& coords, const ResidueField& field) {
    const std::uint64_t q = field.characteristic();
    PolyFq p(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        mpz_class r = coords[i] % static_cast<unsigned long>(q);
        if (r < 0) r += q;
        p[i] = r.get_ui();
    }
    return field.from_poly(p);
}

FieldElem reduce_mod_prime(const CyclotomicInt& x, const PrimeSplitting& split, std::size_t i,
                           const ResidueField& field) {
    if (i >= split.factors.size()) throw std::out_of_range("reduce_mod_prime: prime index out of range");
    return reduce_coordinates(subfield_coordinates(x, split.subfield), field);
}

FieldElem reduce_mod_prime(const CyclotomicInt& x, const PrimeSplitting& split, const std::string& label) {
    const std::size_t i = split.index_of(label);
    return reduce_mod_prime(x, split, i, split.residue_field(i));
}

namespace {

FieldElem eval_in(const PolyFq& h, const FieldElem& at, const ResidueField& field) {
    FieldElem r = field.zero();
    for (std::size_t k = h.size(); k-- > 0;) r = field.add(field.mul(r, at), field.from_int(static_cast<std::int64_t>(h[k])));
    return r;
}

} // namespace

std::size_t prime_below(const PrimeSplitting& full, std::size_t i, const PrimeSplitting& sub) {
    if (full.subfield != Subfield::full || full.q != sub.q) throw std::invalid_argument("prime_below: mismatched splittings");
    const ResidueField field = full.residue_field(i);
    const FieldElem theta = reduce_mod_prime(subfield_generator(sub.subfield), full, i, field);
    for (std::size_t j = 0; j < sub.factors.size(); ++j) {
        if (field.is_zero(eval_in(sub.factors[j], theta, field))) return j;
    }
    throw std::logic_error("prime_below: no subfield prime below");
}

FieldElem embed_residue(const FieldElem& x, const PrimeSplitting& sub, std::size_t sub_index,
                        const PrimeSplitting& full, std::size_t full_index) {
    if (prime_below(full, full_index, sub) != sub_index) throw std::invalid_argument("embed_residue: primes do not lie over each other");
    const ResidueField field = full.residue_field(full_index);
    const FieldElem theta = reduce_mod_prime(subfield_generator(sub.subfield), full, full_index, field);
    FieldElem r = field.zero();
    for (unsigned k = sub.f; k-- > 0;) r = field.add(field.mul(r, theta), field.from_int(x.c[k]));
    return r;
}

std::vector<std::uint64_t> find_sieve_primes(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q : primes_up_to(bound)) {
        if (q == kConductor) continue;
        const unsigned f = multiplicative_order(q, kConductor);
        if (powmod(q, f, 7) == 1) out.push_back(q);
    }
    return out;
}

} // namespace frey
