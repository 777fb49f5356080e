#include "frey/bivariate.hpp"

#include "frey/modarith.hpp"

namespace frey {

BivariatePoly BivariatePoly::constant(const CyclotomicInt& c) { return monomial(c, 0, 0); }

BivariatePoly BivariatePoly::monomial(const CyclotomicInt& c, unsigned da, unsigned db) {
    BivariatePoly p;
    p.add_term(da, db, c);
    return p;
}

void BivariatePoly::add_term(unsigned da, unsigned db, const CyclotomicInt& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({da, db}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
    return *this;
}

BivariatePoly operator*(const BivariatePoly& x, const BivariatePoly& y) {
    BivariatePoly r;
    for (const auto& [ex, cx] : x.terms_) {
        for (const auto& [ey, cy] : y.terms_) r.add_term(ex.first + ey.first, ex.second + ey.second, cx * cy);
    }
    return r;
}

BivariatePoly operator*(const CyclotomicInt& c, const BivariatePoly& x) {
    BivariatePoly r;
    for (const auto& [e, cx] : x.terms_) r.add_term(e.first, e.second, c * cx);
    return r;
}

CyclotomicInt BivariatePoly::evaluate(const mpz_class& a, const mpz_class& b) const {
    CyclotomicInt r;
    for (const auto& [e, c] : terms_) {
        mpz_class m = 1;
        for (unsigned i = 0; i < e.first; ++i) m *= a;
        for (unsigned i = 0; i < e.second; ++i) m *= b;
        r += c * CyclotomicInt(m);
    }
    return r;
}

BivariatePoly BivariatePoly::galois(unsigned j) const {
    BivariatePoly r;
    for (const auto& [e, c] : terms_) r.add_term(e.first, e.second, c.galois(j));
    return r;
}

FieldElem ReducedBivariate::evaluate(const ResidueField& field, std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t q = field.characteristic();
    FieldElem r = field.zero();
    for (const auto& t : terms) {
        const std::uint64_t m = mulmod(powmod(a, t.da, q), powmod(b, t.db, q), q);
        if (m) r = field.add(r, field.scale(t.c, m));
    }
    return r;
}

} // namespace frey
