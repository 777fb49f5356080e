#include "doctest.h"
#include "oracles.hpp"

#include "frey/freycurves.hpp"
#include "frey/modarith.hpp"
#include "frey/models.hpp"

#include <cmath>
#include <random>

using namespace frey;

namespace {

ReducedCurve prime_field_curve(std::uint64_t p, std::array<std::int64_t, 5> a) {
    auto field = std::make_shared<const PointCountField>(ResidueField(p, PolyFq{0, 1}));
    std::array<FieldElem, 5> coeffs;
    for (std::size_t k = 0; k < 5; ++k) coeffs[k] = field->field().from_int(a[k]);
    return make_reduced_curve(field, coeffs);
}

// Quadratic extension F_p[t]/(t^2 - n) with n the least non-residue; p odd.
ResidueField quadratic_extension(std::uint64_t p) {
    std::uint64_t n = 2;
    while (oracle::power(static_cast<std::int64_t>(n), static_cast<std::int64_t>((p - 1) / 2), static_cast<std::int64_t>(p)) == 1) ++n;
    return ResidueField(p, PolyFq{p - n, 0, 1});
}

} // namespace

TEST_CASE("point-count oracle on y^2 = x^3 + x") {
    CHECK(oracle::trace(5, 0, 0, 0, 1, 0) == 2);
    CHECK(oracle::trace(7, 0, 0, 0, 1, 0) == 0);
    CHECK(trace_of_frobenius(prime_field_curve(5, {0, 0, 0, 1, 0})) == 2);
    CHECK(trace_of_frobenius(prime_field_curve(7, {0, 0, 0, 1, 0})) == 0);
}

TEST_CASE("traces agree with exhaustive enumeration over prime fields") {
    std::mt19937 gen(1729);
    int checked = 0;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
        for (int t = 0; t < 15; ++t) {
            std::array<std::int64_t, 5> a;
            for (auto& x : a) x = static_cast<std::int64_t>(gen() % p);
            const auto pp = static_cast<std::int64_t>(p);
            const ReducedCurve c = prime_field_curve(p, a);
            const bool singular = oracle::discriminant(pp, a[0], a[1], a[2], a[3], a[4]) == 0;
            CHECK((c.type != ReductionType::good) == singular);
            CHECK(static_cast<std::int64_t>(count_points(c)) == oracle::count_points(pp, a[0], a[1], a[2], a[3], a[4]));
            ++checked;
        }
    }
    CHECK(checked == 225);
}

TEST_CASE("Hasse bound on random good-reduction fixtures") {
    std::mt19937 gen(99);
    std::vector<std::shared_ptr<const PointCountField>> fields;
    for (std::uint64_t q : {2, 3, 5, 7, 11, 17, 23, 29, 53, 79, 83})
        for (Subfield s : {Subfield::full, Subfield::quadratic, Subfield::cubic}) {
            auto sp = split_prime(q, s);
            if (sp.f <= 12 && std::pow(static_cast<double>(q), sp.f) <= static_cast<double>(kMaxPointCountField)) {
                for (std::size_t i = 0; i < sp.g; ++i) fields.push_back(std::make_shared<const PointCountField>(sp.residue_field(i)));
            }
        }
    int good = 0;
    while (good < 1000) {
        const auto& field = fields[gen() % fields.size()];
        const std::uint64_t n = field->field().size();
        std::array<FieldElem, 5> a;
        for (auto& x : a) x = field->field().element(gen() % n);
        const ReducedCurve c = make_reduced_curve(field, a);
        if (c.type != ReductionType::good) continue;
        const std::int64_t t = trace_of_frobenius(c);
        CHECK(static_cast<double>(t * t) <= 4.0 * static_cast<double>(n));
        ++good;
    }
    CHECK(good == 1000);
}

TEST_CASE("base change to F_{q^2}: #E = q^2 + 1 - (a^2 - 2q)") {
    std::mt19937 gen(4242);
    int done = 0;
    for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89}) {
        const ResidueField ext = quadratic_extension(p);
        auto big = std::make_shared<const PointCountField>(ext);
        int per_prime = 0;
        while (per_prime < 5) {
            std::array<std::int64_t, 5> a;
            for (auto& x : a) x = static_cast<std::int64_t>(gen() % p);
            const auto pp = static_cast<std::int64_t>(p);
            if (oracle::discriminant(pp, a[0], a[1], a[2], a[3], a[4]) == 0) continue;
            const std::int64_t t = oracle::trace(pp, a[0], a[1], a[2], a[3], a[4]);
            std::array<FieldElem, 5> lifted;
            for (std::size_t k = 0; k < 5; ++k) lifted[k] = ext.from_int(a[k]);
            const ReducedCurve c = make_reduced_curve(big, lifted);
            REQUIRE(c.type == ReductionType::good);
            CHECK(static_cast<std::int64_t>(count_points(c)) == pp * pp + 1 - (t * t - 2 * pp));
            ++per_prime;
            ++done;
        }
        if (done >= 100) break;
    }
    CHECK(done >= 100);
}

TEST_CASE("characteristic 2: y^2 + y = x^3 over F_2 and F_4") {
    CHECK(count_points(prime_field_curve(2, {0, 0, 1, 0, 0})) == 3);
    const ResidueField f4(2, PolyFq{1, 1, 1});
    auto field = std::make_shared<const PointCountField>(f4);
    std::array<FieldElem, 5> a{f4.zero(), f4.zero(), f4.one(), f4.zero(), f4.zero()};
    // a = 0 over F_2 gives #E(F_4) = 4 + 1 - (0 - 4)
    CHECK(count_points(make_reduced_curve(field, a)) == 9);
}

TEST_CASE("reduction types") {
    CHECK(prime_field_curve(7, {0, 0, 0, 1, 0}).type == ReductionType::good);
    CHECK(prime_field_curve(7, {0, 1, 0, 0, 0}).type == ReductionType::multiplicative); // y^2 = x^2 (x + 1)
    CHECK(prime_field_curve(7, {0, 0, 0, 0, 0}).type == ReductionType::additive);      // cusp
    CHECK_THROWS_AS(trace_of_frobenius(prime_field_curve(7, {0, 0, 0, 0, 0})), std::invalid_argument);
    CHECK_THROWS_AS(PointCountField(split_prime(7, Subfield::full).residue_field(0)), std::invalid_argument);
}

TEST_CASE("model file format") {
    const FreyCurveModel e = models::quadratic_family();
    const FreyCurveModel f = models::cubic_family();
    CHECK(e.field == Subfield::quadratic);
    CHECK(f.field == Subfield::cubic);
    CHECK(parse_curve_model(format_curve_model(e)) == e);
    CHECK(parse_curve_model(format_curve_model(f)) == f);

    const std::string good = "# comment\nname = T\nfield = cubic\na4 += (0, 0) [-1,0,0,0,0,0,0,0,0,0,0,0]\n"
                             "a6 += (1, 1) [0,0,0,0,0,0,0,0,0,0,0,0]\n";
    const FreyCurveModel t = parse_curve_model(good);
    CHECK(t.name == "T");
    CHECK(t.a[3].terms().size() == 1);

    const auto line_of = [](const std::string& text) {
        try {
            parse_curve_model(text);
        } catch (const CurveFormatError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("name = T\nfield = cubic\na5 += (0, 0) [1]\n") == 3);
    CHECK(line_of("name = T\nfield = sextic\n") == 2);
    CHECK(line_of("name = T\nfield = cubic\n\na2 += (0, 0) [0,1,0,0,0,0,0,0,0,0,0,0]\n") == 4); // zeta is not in K
    CHECK(line_of("name = T\nfield = cubic\na2 += (x, 0) [1]\n") == 3);
    CHECK(line_of("field = cubic\n") == 1);
    CHECK(line_of("name = T\nfield = cubic\nbogus\n") == 3);
}

TEST_CASE("Frey families") {
    const FreyCurveModel e = models::quadratic_family();
    const FreyCurveModel f = models::cubic_family();
    for (const auto& m : {e, f}) {
        for (const auto& coeff : m.a)
            for (const auto& [exp, c] : coeff.terms()) CHECK(lies_in(c, m.field));
        CHECK_FALSE(m.disc.is_zero());
    }

    SUBCASE("weighted homogeneity: a_i has degree i in (a, b)") {
        for (const auto& m : {e, f})
            for (std::size_t k = 0; k < 5; ++k)
                for (const auto& [exp, c] : m.a[k].terms()) CHECK(exp.first + exp.second == kWeierstrassIndices[k]);
    }

    SUBCASE("E(1,-1) is its own target") {
        const TargetEigensystem target{TargetEigensystem::CurveTarget{e, 1, -1}, "E(1,-1)"};
        for (std::uint64_t q : {5, 11, 17, 19, 23, 29}) {
            const auto sp = split_prime(q, Subfield::quadratic);
            for (const auto& label : sp.labels) {
                CHECK(local_constraint(e, target, 1, q - 1, sp, label));
            }
        }
    }

    SUBCASE("the cubic curve is multiplicative above q when q | a + b") {
        for (std::uint64_t q : {5, 17, 19, 23, 29, 37, 41, 43, 61, 83, 89}) {
            const auto sp = split_prime(q, Subfield::cubic);
            for (std::size_t i = 0; i < sp.g; ++i) {
                for (std::uint64_t a : {1, 2, 3}) CHECK(reduction_type_at(f, a, q - a, sp, i) == ReductionType::multiplicative);
            }
        }
    }

    SUBCASE("reduction type from invariants agrees with the reduced curve") {
        for (std::uint64_t q : {5, 7, 11, 17}) {
            const auto sp = split_prime(q, Subfield::quadratic);
            for (std::size_t i = 0; i < sp.g; ++i) {
                const ReducedFamily fam(e, sp, i);
                for (std::uint64_t a = 0; a < q; ++a)
                    for (std::uint64_t b = 0; b < q; ++b) {
                        if (a == 0 && b == 0) continue;
                        CHECK(fam.specialize(a, b).type == reduction_type_at(e, a, b, sp, i));
                    }
            }
        }
        CHECK_THROWS_AS(ReducedFamily(e, split_prime(5, Subfield::quadratic), 0).specialize(0, 0), std::invalid_argument);
        CHECK_THROWS_AS(ReducedFamily(e, split_prime(5, Subfield::cubic), 0), std::invalid_argument);
    }
}

TEST_CASE("characteristic 2 counts agree with enumerating all (x, y)") {
    const ResidueField f16(2, PolyFq{1, 1, 0, 0, 1});
    auto field = std::make_shared<const PointCountField>(f16);
    std::mt19937 gen(16);
    for (int trial = 0; trial < 50; ++trial) {
        std::array<FieldElem, 5> a;
        for (auto& x : a) x = f16.element(gen() % 16);
        std::uint64_t brute = 1;
        for (std::uint64_t i = 0; i < 16; ++i)
            for (std::uint64_t j = 0; j < 16; ++j) {
                const FieldElem x = f16.element(i), y = f16.element(j);
                const FieldElem lhs = f16.add(f16.mul(y, y), f16.add(f16.mul(f16.mul(a[0], x), y), f16.mul(a[2], y)));
                const FieldElem x2 = f16.mul(x, x);
                const FieldElem rhs = f16.add(f16.add(f16.mul(x2, x), f16.mul(a[1], x2)), f16.add(f16.mul(a[3], x), a[4]));
                if (lhs == rhs) ++brute;
            }
        CHECK(count_points(make_reduced_curve(field, a)) == brute);
    }
}
