#include "frey/residue_field.hpp"

#include "frey/modarith.hpp"

#include <stdexcept>

namespace frey {

ResidueField::ResidueField(std::uint64_t q, PolyFq modulus) : q_(q), modulus_(std::move(modulus)) {
    polyfq::trim(modulus_);
    const int d = polyfq::degree(modulus_);
    if (q < 2 || q >= (1ULL << 31)) throw std::invalid_argument("ResidueField: characteristic out of range");
    if (d < 1 || d > 12) throw std::invalid_argument("ResidueField: modulus degree must be in 1..12");
    if (modulus_.back() != 1) throw std::invalid_argument("ResidueField: modulus must be monic");
    f_ = static_cast<unsigned>(d);
    order_ = wide_pow(q_, f_);

    if (has_seventh_roots()) {
        const WideOrder e = (order_ - 1) / 7;
        FieldElem w{};
        for (std::uint64_t idx = 1;; ++idx) {
            w = pow(element(idx), e);
            if (!(w == one())) break;
        }
        seventh_roots_[0] = one();
        for (unsigned k = 1; k < 7; ++k) seventh_roots_[k] = mul(seventh_roots_[k - 1], w);
    }
}

FieldElem ResidueField::one() const {
    FieldElem x{};
    x.c[0] = 1;
    return x;
}

FieldElem ResidueField::from_int(std::int64_t n) const {
    FieldElem x{};
    x.c[0] = static_cast<std::uint32_t>(to_residue(n, q_));
    return x;
}

FieldElem ResidueField::from_poly(const PolyFq& p) const {
    const PolyFq r = polyfq::mod(p, modulus_, q_);
    FieldElem x{};
    for (std::size_t i = 0; i < r.size(); ++i) x.c[i] = static_cast<std::uint32_t>(r[i] % q_);
    return x;
}

FieldElem ResidueField::generator_t() const { return from_poly(PolyFq{0, 1}); }

bool ResidueField::is_zero(const FieldElem& x) const {
    for (unsigned i = 0; i < f_; ++i) {
        if (x.c[i]) return false;
    }
    return true;
}

FieldElem ResidueField::add(const FieldElem& x, const FieldElem& y) const {
    FieldElem r{};
    for (unsigned i = 0; i < f_; ++i) r.c[i] = static_cast<std::uint32_t>((x.c[i] + static_cast<std::uint64_t>(y.c[i])) % q_);
    return r;
}

FieldElem ResidueField::sub(const FieldElem& x, const FieldElem& y) const {
    FieldElem r{};
    for (unsigned i = 0; i < f_; ++i) r.c[i] = static_cast<std::uint32_t>((x.c[i] + q_ - y.c[i]) % q_);
    return r;
}

FieldElem ResidueField::neg(const FieldElem& x) const { return sub(zero(), x); }

FieldElem ResidueField::mul(const FieldElem& x, const FieldElem& y) const {
    std::array<std::uint64_t, 23> prod{};
    for (unsigned i = 0; i < f_; ++i) {
        if (!x.c[i]) continue;
        for (unsigned j = 0; j < f_; ++j) {
            prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(x.c[i]) * y.c[j]) % q_;
        }
    }
    // t^f = -(h_0 + h_1 t + ... + h_(f-1) t^(f-1))
    for (unsigned k = 2 * f_ - 2; k >= f_; --k) {
        const std::uint64_t c = prod[k];
        if (c) {
            prod[k] = 0;
            for (unsigned i = 0; i < f_; ++i) {
                auto& slot = prod[k - f_ + i];
                slot = (slot + (q_ - c) * modulus_[i]) % q_;
            }
        }
        if (k == 0) break;
    }
    FieldElem r{};
    for (unsigned i = 0; i < f_; ++i) r.c[i] = static_cast<std::uint32_t>(prod[i]);
    return r;
}

FieldElem ResidueField::scale(const FieldElem& x, std::uint64_t s) const {
    FieldElem r{};
    s %= q_;
    for (unsigned i = 0; i < f_; ++i) r.c[i] = static_cast<std::uint32_t>(x.c[i] * s % q_);
    return r;
}

std::uint64_t ResidueField::size() const {
    if (order_ >= (static_cast<WideOrder>(1) << 63)) throw std::overflow_error("ResidueField::size: q^f exceeds 2^63");
    return static_cast<std::uint64_t>(order_);
}

FieldElem ResidueField::pow(FieldElem x, WideOrder e) const {
    FieldElem r = one();
    while (e) {
        if (e & 1) r = mul(r, x);
        e >>= 1;
        if (e) x = mul(x, x);
    }
    return r;
}

FieldElem ResidueField::inv(const FieldElem& x) const {
    if (is_zero(x)) throw std::domain_error("ResidueField::inv: zero");
    return pow(x, order_ - 2);
}

std::uint64_t ResidueField::index(const FieldElem& x) const {
    std::uint64_t idx = 0;
    for (unsigned i = f_; i-- > 0;) idx = idx * q_ + x.c[i];
    return idx;
}

FieldElem ResidueField::element(std::uint64_t idx) const {
    FieldElem x{};
    for (unsigned i = 0; i < f_; ++i) {
        x.c[i] = static_cast<std::uint32_t>(idx % q_);
        idx /= q_;
    }
    return x;
}

bool ResidueField::is_seventh_power(const FieldElem& x) const {
    if (is_zero(x)) throw std::domain_error("is_seventh_power: zero input");
    if (!has_seventh_roots()) return true;
    return pow(x, (order_ - 1) / 7) == one();
}

unsigned ResidueField::seventh_power_character(const FieldElem& x) const {
    if (is_zero(x)) throw std::domain_error("seventh_power_character: zero input");
    if (!has_seventh_roots()) throw std::logic_error("seventh_power_character: 7 does not divide q^f - 1");
    const FieldElem r = pow(x, (order_ - 1) / 7);
    for (unsigned k = 0; k < 7; ++k) {
        if (r == seventh_roots_[k]) return k;
    }
    throw std::logic_error("seventh_power_character: power is not a 7th root of unity");
}

std::string ResidueField::to_string(const FieldElem& x) const {
    std::string out = "[";
    for (unsigned i = 0; i < f_; ++i) {
        if (i) out += ',';
        out += std::to_string(x.c[i]);
    }
    return out + "]";
}

} // namespace frey
