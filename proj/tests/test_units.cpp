#include "doctest.h"
#include "oracles.hpp"

#include "frey/primes.hpp"
#include "frey/units.hpp"

#include <random>
#include <set>

using namespace frey;

TEST_CASE("prime splitting matches residue degrees from (Z/13)^x") {
    const std::vector<unsigned> squares{1, 3, 4, 9, 10, 12};
    const std::vector<unsigned> cubic_h{1, 5, 8, 12};
    for (std::uint64_t q : primes_up_to(120)) {
        if (q == 13) continue;
        const auto full = split_prime(q, Subfield::full);
        CHECK(full.f == oracle::order_into(q, {1}));
        CHECK(full.f * full.g == 12);
        const auto quad = split_prime(q, Subfield::quadratic);
        CHECK(quad.f == oracle::order_into(q, squares));
        CHECK(quad.f * quad.g == 2);
        const auto cub = split_prime(q, Subfield::cubic);
        CHECK(cub.f == oracle::order_into(q, cubic_h));
        CHECK(cub.f * cub.g == 3);
        CHECK(full.labels.size() == full.g);
        CHECK(full.labels.front() == std::to_string(q) + ".1");
        for (const auto& h : full.factors) {
            // every factor divides Phi_13 mod q
            PolyFq quot, rem;
            polyfq::divmod(PolyFq(13, 1), h, q, quot, rem);
            CHECK(rem.empty());
        }
    }
}

TEST_CASE("splitting examples") {
    const auto s2 = split_prime(2, Subfield::full);
    CHECK(s2.f == 12);
    CHECK(s2.g == 1);
    const auto s3 = split_prime(3, Subfield::full);
    CHECK(s3.f == 3);
    CHECK(s3.g == 4);
    CHECK(split_prime(2, Subfield::cubic).norm() == 8);
    CHECK(split_prime(3, Subfield::cubic).norm() == 27);
    CHECK(split_prime(5, Subfield::cubic).g == 3);
    CHECK(split_prime(83, Subfield::cubic).g == 3);
    CHECK(split_prime(23, Subfield::full).f == 6);
    const auto s13 = split_prime(13, Subfield::cubic);
    CHECK(s13.ramified);
    CHECK(s13.g == 1);
    CHECK(s13.e == 3);
    CHECK(s13.labels == std::vector<std::string>{"13.1"});
    CHECK_THROWS_AS(split_prime(15, Subfield::full), std::invalid_argument);
    CHECK_THROWS_AS(split_prime(1, Subfield::cubic), std::invalid_argument);
}

TEST_CASE("reduction maps are ring homomorphisms and respect the subfield tower") {
    std::mt19937 gen(21);
    const auto rnd = [&] {
        CyclotomicInt::Coords c;
        for (auto& x : c) x = static_cast<long>(gen() % 21) - 10;
        return CyclotomicInt(c);
    };
    for (std::uint64_t q : {3, 5, 23, 29, 83}) {
        const auto full = split_prime(q, Subfield::full);
        for (std::size_t i = 0; i < full.g; ++i) {
            const ResidueField f = full.residue_field(i);
            for (int t = 0; t < 5; ++t) {
                const CyclotomicInt x = rnd(), y = rnd();
                CHECK(reduce_mod_prime(x * y, full, i, f) ==
                      f.mul(reduce_mod_prime(x, full, i, f), reduce_mod_prime(y, full, i, f)));
            }
            // the factor's root is the image of zeta
            CHECK(reduce_mod_prime(CyclotomicInt::zeta(), full, i, f) == f.generator_t());
            const auto cub = split_prime(q, Subfield::cubic);
            const std::size_t j = prime_below(full, i, cub);
            const ResidueField fk = cub.residue_field(j);
            const CyclotomicInt eta = subfield_generator(Subfield::cubic);
            const CyclotomicInt x = eta * eta - CyclotomicInt(3) * eta + CyclotomicInt(7);
            CHECK(embed_residue(reduce_mod_prime(x, cub, j, fk), cub, j, full, i) == reduce_mod_prime(x, full, i, f));
        }
    }
}

TEST_CASE("find_sieve_primes") {
    const auto ps = find_sieve_primes(83);
    for (std::uint64_t q : {2, 11, 19, 23, 83}) CHECK(std::find(ps.begin(), ps.end(), q) != ps.end());
    for (std::uint64_t q : ps) {
        const unsigned f = oracle::order_into(q, {1});
        CHECK(oracle::power(static_cast<std::int64_t>(q), f, 7) == 1);
    }
    CHECK(std::find(ps.begin(), ps.end(), 13) == ps.end());
    CHECK(std::find(ps.begin(), ps.end(), 3) == ps.end()); // f = 3, 27 - 1 = 26
}

TEST_CASE("unit classes") {
    const auto all = unit_class_enumerate();
    CHECK(all.size() == kUnitClassCount);
    CHECK(all.front() == UnitClass{});
    std::set<std::string> names;
    for (const auto& u : all) names.insert(u.to_string());
    CHECK(names.size() == 16807);
    CHECK(UnitClass::from_index(1234).index() == 1234);
    CHECK(UnitClass::parse("10000").e[0] == 1);
    CHECK_THROWS(UnitClass::parse("1000"));
    CHECK_THROWS(UnitClass::parse("10007"));
}

TEST_CASE("cyclotomic units and the class map") {
    const UnitBasis basis;
    for (unsigned k = 2; k <= 6; ++k) {
        const mpz_class n = cyclotomic_unit(k).norm();
        CHECK((n == 1 || n == -1));
    }
    const UnitLogMap logs(basis);
    CHECK(logs.primes().size() == kUnitRank);
    std::vector<std::vector<unsigned>> rows;
    for (const auto& r : logs.matrix()) rows.emplace_back(r.begin(), r.end());
    CHECK(rank_mod7(rows) == 5);
    for (const auto& p : logs.primes()) {
        const auto skip = std::vector<std::uint64_t>{2, 11, 19, 23, 83};
        CHECK(std::find(skip.begin(), skip.end(), p.split.q) == skip.end());
    }

    SUBCASE("round trip on random classes") {
        std::mt19937 gen(7);
        for (int t = 0; t < 40; ++t) {
            const UnitClass u = UnitClass::from_index(gen() % kUnitClassCount);
            CHECK(logs.class_of(basis.value(u)) == u);
        }
    }

    SUBCASE("class_of is a homomorphism and kills 7th powers") {
        std::mt19937 gen(8);
        for (int t = 0; t < 10; ++t) {
            const UnitClass u = UnitClass::from_index(gen() % kUnitClassCount);
            const UnitClass v = UnitClass::from_index(gen() % kUnitClassCount);
            CHECK(logs.class_of(basis.value(u) * basis.value(v)) == u + v);
            CHECK(logs.class_of(basis.value(u).pow(7)) == UnitClass{});
        }
        CHECK(logs.class_of(CyclotomicInt(-1)) == UnitClass{});
        CHECK(logs.class_of(CyclotomicInt::zeta()) == UnitClass{}); // zeta = (zeta^2)^7
    }

    SUBCASE("generator overrides") {
        std::vector<CyclotomicInt> gens = basis.generators();
        gens.pop_back();
        CHECK_THROWS_AS(UnitBasis{gens}, std::invalid_argument);
        gens.push_back(CyclotomicInt(2));
        CHECK_THROWS_AS(UnitBasis{gens}, std::invalid_argument);
        gens.back() = basis.generators()[0].pow(2); // dependent modulo 7th powers
        CHECK_THROWS_AS(UnitLogMap(UnitBasis{gens}), std::runtime_error);
    }
}

TEST_CASE("epsilon0") {
    const CyclotomicInt eps = epsilon0_value();
    const CyclotomicInt omz = CyclotomicInt(1) - CyclotomicInt::zeta();
    CHECK(CyclotomicInt(28561) - CyclotomicInt(28561) * CyclotomicInt::zeta() == eps * omz.pow(49));
    CHECK(epsilon0_identity_holds(eps));
    CHECK_FALSE(epsilon0_identity_holds(eps + CyclotomicInt(1)));
    CHECK(eps.norm() == 1);
    CHECK(eps * omz.pow(48) == CyclotomicInt(28561));
    const UnitLogMap logs(UnitBasis{});
    const Epsilon0 e = epsilon0(logs);
    CHECK(e.value == eps);
    CHECK(e.cls == UnitClass::parse("11111"));
    CHECK_FALSE(e.cls == UnitClass{});
}
