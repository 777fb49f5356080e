#include "frey/freycurves.hpp"

#include "frey/modarith.hpp"

#include <stdexcept>

namespace frey {

namespace {

struct FieldRing {
    const ResidueField& f;
    FieldElem add(const FieldElem& x, const FieldElem& y) const { return f.add(x, y); }
    FieldElem sub(const FieldElem& x, const FieldElem& y) const { return f.sub(x, y); }
    FieldElem mul(const FieldElem& x, const FieldElem& y) const { return f.mul(x, y); }
    FieldElem scale(const FieldElem& x, std::int64_t s) const { return f.scale(x, to_residue(s, f.characteristic())); }
};

} // namespace

PointCountField::PointCountField(ResidueField field) : field_(std::move(field)) {
    const std::uint64_t n = field_.size();
    if (n > kMaxPointCountField) {
        throw std::invalid_argument("point counting limited to residue fields of size <= " +
                                    std::to_string(kMaxPointCountField) + " (got " + std::to_string(n) + ")");
    }
    chi_.assign(n, -1);
    chi_[0] = 0;
    for (std::uint64_t i = 1; i < n; ++i) {
        const FieldElem x = field_.element(i);
        chi_[field_.index(field_.mul(x, x))] = 1;
    }
    if (field_.characteristic() != 2) return;
    inv_.assign(n, 0);
    trace_.assign(n, 0);
    for (std::uint64_t i = 1; i < n; ++i) {
        if (inv_[i]) continue;
        const FieldElem x = field_.element(i);
        const std::uint64_t j = field_.index(field_.inv(x));
        inv_[i] = static_cast<std::uint32_t>(j);
        inv_[j] = static_cast<std::uint32_t>(i);
    }
    for (std::uint64_t i = 1; i < n; ++i) {
        FieldElem u = field_.element(i), tr = u;
        for (unsigned k = 1; k < field_.degree(); ++k) {
            u = field_.mul(u, u);
            tr = field_.add(tr, u);
        }
        trace_[i] = static_cast<std::uint8_t>(tr.c[0]);
    }
}

FieldElem PointCountField::inverse(const FieldElem& x) const {
    if (inv_.empty()) throw std::logic_error("PointCountField::inverse: characteristic 2 only");
    if (field_.is_zero(x)) throw std::domain_error("PointCountField::inverse: zero");
    return field_.element(inv_[field_.index(x)]);
}

unsigned PointCountField::absolute_trace(const FieldElem& x) const {
    if (trace_.empty()) throw std::logic_error("PointCountField::absolute_trace: characteristic 2 only");
    return trace_[field_.index(x)];
}

int PointCountField::quadratic_character(const FieldElem& x) const { return chi_[field_.index(x)]; }

ReducedCurve make_reduced_curve(std::shared_ptr<const PointCountField> field, const std::array<FieldElem, 5>& a) {
    ReducedCurve c;
    c.field = std::move(field);
    c.a = a;
    const ResidueField& f = c.field->field();
    FieldElem c4, disc;
    weierstrass_invariants(FieldRing{f}, c.a, c4, disc);
    if (!f.is_zero(disc)) {
        c.type = ReductionType::good;
    } else if (!f.is_zero(c4)) {
        c.type = ReductionType::multiplicative;
    } else {
        c.type = ReductionType::additive;
    }
    return c;
}

std::uint64_t count_points(const ReducedCurve& c) {
    const ResidueField& f = c.field->field();
    const std::uint64_t n = f.size();
    const auto& [a1, a2, a3, a4, a6] = c.a;
    std::uint64_t count = 1; // point at infinity

    if (f.characteristic() == 2) {
        // y^2 + l y = r: one root if l = 0, else y = l z with z^2 + z = r / l^2, solvable iff Tr(r / l^2) = 0
        for (std::uint64_t ix = 0; ix < n; ++ix) {
            const FieldElem x = f.element(ix);
            const FieldElem rhs = f.add(f.mul(f.add(f.mul(f.add(x, a2), x), a4), x), a6);
            const FieldElem lin = f.add(f.mul(a1, x), a3);
            if (f.is_zero(lin)) {
                count += 1;
                continue;
            }
            const FieldElem li = c.field->inverse(lin);
            if (c.field->absolute_trace(f.mul(rhs, f.mul(li, li))) == 0) count += 2;
        }
        return count;
    }

    // (2y + a1 x + a3)^2 = 4(x^3 + a2 x^2 + a4 x + a6) + (a1 x + a3)^2
    for (std::uint64_t ix = 0; ix < n; ++ix) {
        const FieldElem x = f.element(ix);
        const FieldElem cubic = f.add(f.mul(f.add(f.mul(f.add(x, a2), x), a4), x), a6);
        const FieldElem lin = f.add(f.mul(a1, x), a3);
        const FieldElem g = f.add(f.scale(cubic, 4), f.mul(lin, lin));
        count += static_cast<std::uint64_t>(1 + c.field->quadratic_character(g));
    }
    return count;
}

std::int64_t trace_of_frobenius(const ReducedCurve& c) {
    if (c.type != ReductionType::good) {
        throw std::invalid_argument("trace_of_frobenius: reduction is " + std::string(reduction_type_name(c.type)));
    }
    const auto n = static_cast<std::int64_t>(c.field->field().size());
    return n + 1 - static_cast<std::int64_t>(count_points(c));
}

} // namespace frey
