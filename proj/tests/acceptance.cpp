// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "oracles.hpp"

#include "frey/eigensystems.hpp"
#include "frey/freycurves.hpp"
#include "frey/modarith.hpp"
#include "frey/sieve.hpp"
#include "frey/units.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

using namespace frey;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

const std::filesystem::path kData = FREY_TEST_DATA_DIR;

const UnitBasis& basis() {
    static const UnitBasis b;
    return b;
}

const UnitLogMap& logs() {
    static const UnitLogMap l(basis());
    return l;
}

const SieveContext& context() {
    static const SieveContext ctx(basis(), load_curve_model(kData / "E_ab.model"), std::nullopt);
    return ctx;
}

UnitClass eps0_class() { return logs().class_of(epsilon0_value()); }

Outcome unit_enumeration() {
    const auto classes = unit_class_enumerate();
    std::vector<std::vector<unsigned>> rows;
    for (const auto& r : logs().matrix()) rows.emplace_back(r.begin(), r.end());
    const unsigned rank = rank_mod7(rows);
    std::ostringstream d;
    d << "classes " << classes.size() << ", character matrix rank " << rank << " over F7";
    return {classes.size() == 16807 && rank == 5, d.str()};
}

Outcome epsilon0_identity() {
    const CyclotomicInt eps = epsilon0_value();
    const CyclotomicInt lhs = CyclotomicInt(28561) - CyclotomicInt(28561) * CyclotomicInt::zeta();
    const CyclotomicInt rhs = eps * (CyclotomicInt(1) - CyclotomicInt::zeta()).pow(49);
    const mpz_class n = eps.norm();
    std::ostringstream d;
    d << "13^4 - 13^4 zeta == eps0 (1 - zeta)^49: " << (lhs == rhs ? "yes" : "no") << ", N(eps0) = " << n;
    return {lhs == rhs && (n == 1 || n == -1), d.str()};
}

Outcome sieve_run_one() {
    bool ok = true;
    std::ostringstream d;
    for (bool t : {true, false}) {
        const auto r = surviving_units(context(), {t, Parity::odd_sum}, {2, 11, 19, 23});
        const auto r7 = surviving_units(context(), {t, Parity::odd_sum}, {2, 11, 19, 23}, {true, false, false});
        d << (t ? "13 | a+b" : "13 !| a+b") << ": " << r.survivors.size() << " survivors (7th-power only: "
          << r7.survivors.size() << "); ";
        ok = ok && r.survivors.empty() && r7.survivors.size() == 504;
    }
    return {ok, d.str()};
}

Outcome sieve_run_two() {
    const auto r = surviving_units(context(), {false, Parity::four_divides}, {2, 11, 19, 23, 83});
    std::ostringstream d;
    d << r.survivors.size() << " survivor(s):";
    for (const auto& u : r.survivors) d << " " << u.to_string();
    d << "; class(eps0) = " << eps0_class().to_string();
    return {r.survivors == std::vector<UnitClass>{eps0_class()}, d.str()};
}

Outcome level_raising() {
    const SieveCase c{false, Parity::none};
    const auto full = level_raising_scan(context(), level_raising_primes(), eps0_class(), c, {true, true, false});
    const std::vector<std::uint64_t> subset{5, 17, 23, 29, 43, 61};
    const auto modular = level_raising_scan(context(), subset, eps0_class(), c, {false, true, false});
    std::ostringstream d;
    bool ok = full.success() && modular.success();
    for (const auto& s : full.steps) d << s.q << (s.all_forced() ? ":forced " : ":NOT ");
    d << "| modular alone:";
    for (const auto& s : modular.steps) d << " " << s.q << (s.all_forced() ? ":forced" : ":NOT");
    return {ok, d.str()};
}

Outcome eigensystem_filter() {
    const EigensystemTable t = synthetic_fixture(39);
    const auto ids = level_raising_filter(t, default_filter_primes());
    const auto cls = classify_survivors(t, ids);
    std::vector<std::string> names;
    for (const auto& c : cls) names.emplace_back(eigen_class_name(c.cls));
    std::ostringstream d;
    d << t.rows().size() << " rows, " << ids.size() << " survivors, classified:";
    for (const auto& n : names) d << " " << n;
    const bool ok = t.rows().size() >= 43 && ids == std::vector<std::string>{"E1", "E2", "E1chi", "E2chi"} &&
                    names == std::vector<std::string>{"E1", "E2", "E1chi", "E2chi"};
    return {ok, d.str()};
}

Outcome frobenius_traces() {
    bool ok = true;
    std::mt19937 gen(20240613);
    const auto prime_curve = [](std::uint64_t p, const std::array<std::int64_t, 5>& a, const ResidueField& f) {
        auto field = std::make_shared<const PointCountField>(f);
        std::array<FieldElem, 5> c;
        for (std::size_t k = 0; k < 5; ++k) c[k] = f.from_int(a[k]);
        (void)p;
        return make_reduced_curve(field, c);
    };

    // y^2 = x^3 + x
    const std::int64_t o5 = oracle::trace(5, 0, 0, 0, 1, 0), o7 = oracle::trace(7, 0, 0, 0, 1, 0);
    const std::int64_t l5 = trace_of_frobenius(prime_curve(5, {0, 0, 0, 1, 0}, ResidueField(5, PolyFq{0, 1})));
    const std::int64_t l7 = trace_of_frobenius(prime_curve(7, {0, 0, 0, 1, 0}, ResidueField(7, PolyFq{0, 1})));
    ok = ok && o5 == 2 && o7 == 0 && l5 == 2 && l7 == 0;

    // Hasse on 1000 good fixtures over residue fields of the three fields
    std::vector<std::shared_ptr<const PointCountField>> fields;
    for (std::uint64_t q : {2, 3, 5, 7, 11, 23, 29, 53, 83})
        for (Subfield s : {Subfield::full, Subfield::quadratic, Subfield::cubic}) {
            const auto sp = split_prime(q, s);
            if (std::pow(static_cast<double>(q), sp.f) <= static_cast<double>(kMaxPointCountField)) fields.push_back(std::make_shared<const PointCountField>(sp.residue_field(0)));
        }
    int hasse = 0;
    while (hasse < 1000) {
        const auto& field = fields[gen() % fields.size()];
        const std::uint64_t n = field->field().size();
        std::array<FieldElem, 5> a;
        for (auto& x : a) x = field->field().element(gen() % n);
        const ReducedCurve c = make_reduced_curve(field, a);
        if (c.type != ReductionType::good) continue;
        const std::int64_t t = trace_of_frobenius(c);
        ok = ok && static_cast<double>(t * t) <= 4.0 * static_cast<double>(n);
        ++hasse;
    }

    // base change on 100 fixtures: count over F_{p^2} against the oracle trace over F_p
    int base = 0;
    for (std::uint64_t p : {3, 5, 7, 11, 17, 19, 29, 31, 41, 43}) {
        std::uint64_t nr = 2;
        while (oracle::power(static_cast<std::int64_t>(nr), static_cast<std::int64_t>((p - 1) / 2), static_cast<std::int64_t>(p)) == 1) ++nr;
        const ResidueField ext(p, PolyFq{p - nr, 0, 1});
        const auto pp = static_cast<std::int64_t>(p);
        for (int k = 0; k < 10;) {
            std::array<std::int64_t, 5> a;
            for (auto& x : a) x = static_cast<std::int64_t>(gen() % p);
            if (oracle::discriminant(pp, a[0], a[1], a[2], a[3], a[4]) == 0) continue;
            const std::int64_t t = oracle::trace(pp, a[0], a[1], a[2], a[3], a[4]);
            const auto c = prime_curve(p, a, ext);
            ok = ok && static_cast<std::int64_t>(count_points(c)) == pp * pp + 1 - (t * t - 2 * pp);
            ++k;
            ++base;
        }
    }
    std::ostringstream d;
    d << "a5 = " << l5 << ", a7 = " << l7 << " (oracle " << o5 << ", " << o7 << "); Hasse on " << hasse
      << " curves; base change on " << base << " curves";
    return {ok, d.str()};
}

Outcome structural_facts() {
    const auto k2 = split_prime(2, Subfield::cubic), k3 = split_prime(3, Subfield::cubic);
    const auto k5 = split_prime(5, Subfield::cubic), k83 = split_prime(83, Subfield::cubic);
    const auto k13 = split_prime(13, Subfield::cubic);
    const auto ps = find_sieve_primes(83);
    bool contains = true;
    for (std::uint64_t q : {2, 11, 19, 23, 83}) contains = contains && std::find(ps.begin(), ps.end(), q) != ps.end();
    const bool ok = k2.g == 1 && k2.norm() == 8 && k3.g == 1 && k3.norm() == 27 && k5.g == 3 && k5.f == 1 &&
                    k83.g == 3 && k83.f == 1 && k13.g == 1 && k13.ramified && contains;
    std::ostringstream d;
    d << "N(2) = " << k2.norm() << ", N(3) = " << k3.norm() << ", primes above 5: " << k5.g << ", above 83: " << k83.g
      << ", above 13: " << k13.g << ", sieve primes <= 83 contain 2,11,19,23,83: " << (contains ? "yes" : "no");
    return {ok, d.str()};
}

Outcome descent_lemma() {
    std::mt19937_64 gen(777);
    int done = 0, thirteen = 0;
    bool ok = true;
    while (done < 1000) {
        const mpz_class a = static_cast<long>(gen() % 200001) - 100000;
        const mpz_class b = static_cast<long>(gen() % 200001) - 100000;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (g != 1 || a + b == 0) continue;
        mpz_class a13, b13, d;
        mpz_pow_ui(a13.get_mpz_t(), a.get_mpz_t(), 13);
        mpz_pow_ui(b13.get_mpz_t(), b.get_mpz_t(), 13);
        const mpz_class s = a + b;
        const mpz_class c = (a13 + b13) / s;
        mpz_gcd(d.get_mpz_t(), s.get_mpz_t(), c.get_mpz_t());
        ok = ok && (d == 1 || d == 13) && descent_coprimality(a, b) == d;
        if (d == 13) ++thirteen;
        ++done;
    }
    std::ostringstream d;
    d << done << " coprime pairs, gcd in {1, 13} (13 occurred " << thirteen << " times)";
    return {ok, d.str()};
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"unit enumeration and independence certificate", unit_enumeration},
        {"epsilon0 identity", epsilon0_identity},
        {"unit sieve, odd parity, primes 2,11,19,23", sieve_run_one},
        {"unit sieve, 4 | a+b, 13 !| a+b, primes 2,11,19,23,83", sieve_run_two},
        {"level-raising scan", level_raising},
        {"eigensystem filter and classification", eigensystem_filter},
        {"trace of Frobenius properties", frobenius_traces},
        {"structural facts", structural_facts},
        {"descent coprimality", descent_lemma},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << o.detail << " ["
                  << std::fixed << std::setprecision(2) << secs << " s]" << std::endl;
        if (!o.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
