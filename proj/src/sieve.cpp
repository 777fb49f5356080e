#include "frey/sieve.hpp"

#include "frey/modarith.hpp"
#include "frey/parallel.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace frey {

std::string_view parity_name(Parity p) {
    switch (p) {
    case Parity::odd_sum: return "odd";
    case Parity::four_divides: return "four";
    case Parity::none: return "none";
    }
    return "?";
}

std::vector<PairResidue> primitive_pairs(std::uint64_t q, Parity parity) {
    std::vector<PairResidue> out;
    for (std::uint32_t a = 0; a < q; ++a) {
        for (std::uint32_t b = 0; b < q; ++b) {
            if (a == 0 && b == 0) continue;
            if (q == 2 && parity == Parity::odd_sum && (a + b) % 2 == 0) continue;
            out.push_back({a, b});
        }
    }
    return out;
}

SieveContext::SieveContext(UnitBasis basis, std::optional<FreyCurveModel> model, std::optional<TargetEigensystem> target)
    : SieveContext(std::move(basis), std::move(model), std::move(target), Options{}) {}

SieveContext::SieveContext(UnitBasis basis, std::optional<FreyCurveModel> model, std::optional<TargetEigensystem> target,
                           Options options)
    : basis_(std::move(basis)), model_(std::move(model)), target_(std::move(target)), options_(std::move(options)) {
    if (options_.threads == 0) options_.threads = 1;
    if (model_ && !target_) {
        target_ = TargetEigensystem{TargetEigensystem::CurveTarget{*model_, 1, -1}, model_->name + "(1,-1)"};
    }
}

const FreyCurveModel& SieveContext::model() const {
    if (!model_) throw std::logic_error("SieveContext: no curve model loaded");
    return *model_;
}

bool SieveContext::is_level_prime(std::uint64_t q) const {
    return std::find(options_.level_primes.begin(), options_.level_primes.end(), q) != options_.level_primes.end();
}

bool SieveContext::modular_applies(std::uint64_t q) const { return !is_level_prime(q); }

namespace {

/// Common k with every term of a_i of total degree i*k, so that scaling (a, b)
/// by lambda is the isomorphism u = lambda^k; nullopt otherwise.
std::optional<unsigned> scaling_weight(const FreyCurveModel& m) {
    std::optional<unsigned> k;
    for (std::size_t s = 0; s < 5; ++s) {
        const unsigned i = kWeierstrassIndices[s];
        for (const auto& [e, c] : m.a[s].terms()) {
            const unsigned d = e.first + e.second;
            if (d % i != 0) return std::nullopt;
            if (k && *k != d / i) return std::nullopt;
            k = d / i;
        }
    }
    return k;
}

} // namespace

PrimeTables::PrimeTables(const SieveContext& ctx, std::uint64_t q, bool want_modular)
    : q_(q), split_(split_prime(q, Subfield::full)) {
    const std::size_t g = split_.g;
    std::vector<ResidueField> fields;
    for (std::size_t i = 0; i < g; ++i) fields.push_back(split_.residue_field(i));
    has_seventh_ = fields.front().has_seventh_roots();

    if (has_seventh_) {
        const CyclotomicInt omz = CyclotomicInt(1L) - CyclotomicInt::zeta();
        for (std::size_t i = 0; i < g; ++i) {
            std::array<unsigned, kUnitRank> row{};
            for (unsigned k = 0; k < kUnitRank; ++k) {
                row[k] = fields[i].seventh_power_character(reduce_mod_prime(ctx.basis().generators()[k], split_, i, fields[i]));
            }
            gen_chars_.push_back(row);
            omz_chars_.push_back(fields[i].seventh_power_character(reduce_mod_prime(omz, split_, i, fields[i])));
        }
        pair_chars_.assign(q * q * g, kZeroResidue);
        for (std::size_t i = 0; i < g; ++i) {
            const FieldElem t = fields[i].generator_t();
            for (std::uint32_t a = 0; a < q; ++a) {
                for (std::uint32_t b = 0; b < q; ++b) {
                    if (a == 0 && b == 0) continue;
                    const FieldElem x = fields[i].add(fields[i].from_int(a), fields[i].scale(t, b));
                    if (!fields[i].is_zero(x)) {
                        pair_chars_[pair_index(a, b) * g + i] = static_cast<std::uint8_t>(fields[i].seventh_power_character(x));
                    }
                }
            }
        }
    }

    if (want_modular && ctx.modular_applies(q)) {
        if (!ctx.model_ || !ctx.target_) {
            throw std::invalid_argument("modular constraint requested at q = " + std::to_string(q) + " but no curve model is loaded");
        }
        const FreyCurveModel& model = *ctx.model_;
        const PrimeSplitting sub = split_prime(q, model.field);
        modular_applied_ = true;
        modular_pass_.assign(q * q, true);
        std::vector<bool> additive(q * q, false);
        const auto weight = scaling_weight(model);
        for (std::size_t j = 0; j < sub.g; ++j) {
            const ReducedFamily family(model, sub, j);
            const unsigned target = ctx.target_->value_mod7(sub, j);
            auto evaluate = [&](std::uint32_t a, std::uint32_t b, bool& add) {
                const ReducedCurve c = family.specialize(a, b);
                add = c.type == ReductionType::additive;
                return local_constraint(c, target);
            };
            if (weight) {
                // Projective representatives (0, 1) and (1, t); every pair is a nonzero multiple of one.
                std::vector<std::pair<bool, bool>> cls(q + 1);
                for (std::uint32_t t = 0; t <= q; ++t) {
                    bool add = false;
                    const bool ok = t == q ? evaluate(0, 1, add) : evaluate(1, t, add);
                    cls[t] = {ok, add};
                }
                for (std::uint32_t a = 0; a < q; ++a) {
                    for (std::uint32_t b = 0; b < q; ++b) {
                        if (a == 0 && b == 0) continue;
                        const std::uint32_t t = a == 0 ? static_cast<std::uint32_t>(q)
                                                       : static_cast<std::uint32_t>(mulmod(b, invmod(a, q), q));
                        const std::size_t idx = pair_index(a, b);
                        modular_pass_[idx] = modular_pass_[idx] && cls[t].first;
                        additive[idx] = additive[idx] || cls[t].second;
                    }
                }
            } else {
                for (std::uint32_t a = 0; a < q; ++a) {
                    for (std::uint32_t b = 0; b < q; ++b) {
                        if (a == 0 && b == 0) continue;
                        bool add = false;
                        const std::size_t idx = pair_index(a, b);
                        modular_pass_[idx] = modular_pass_[idx] && evaluate(a, b, add);
                        additive[idx] = additive[idx] || add;
                    }
                }
            }
        }
        additive_flags_ = static_cast<std::size_t>(std::count(additive.begin(), additive.end(), true));
    }
}

unsigned PrimeTables::unit_character(const UnitClass& u, std::size_t i) const {
    unsigned s = 0;
    for (unsigned k = 0; k < kUnitRank; ++k) s += u.e[k] * gen_chars_[i][k];
    return s % 7;
}

bool PrimeTables::seventh_power_condition(const UnitClass& u, const PairResidue& p, bool thirteen_divides) const {
    if (!has_seventh_) return true;
    const std::size_t idx = pair_index(p.a, p.b);
    for (std::size_t i = 0; i < split_.g; ++i) {
        const std::uint8_t c = pair_character(idx, i);
        if (c == kZeroResidue) continue;
        const unsigned want = (unit_character(u, i) + (thirteen_divides ? omz_chars_[i] : 0)) % 7;
        if (c != want) return false;
    }
    return true;
}

bool seventh_power_condition(const SieveContext& ctx, const UnitClass& u, const PairResidue& pair, const SieveCase& c,
                             const PrimeSplitting& split, std::size_t prime_index) {
    const ResidueField field = split.residue_field(prime_index);
    if (!field.has_seventh_roots()) return true;
    const FieldElem x = field.add(field.from_int(pair.a), field.scale(field.generator_t(), pair.b));
    if (field.is_zero(x)) return true;
    FieldElem denom = reduce_mod_prime(ctx.basis().value(u), split, prime_index, field);
    if (c.thirteen_divides) {
        denom = field.mul(denom, reduce_mod_prime(CyclotomicInt(1L) - CyclotomicInt::zeta(), split, prime_index, field));
    }
    return field.is_seventh_power(field.mul(x, field.inv(denom)));
}

namespace {

bool pair_allowed(std::uint64_t q, const PairResidue& p, const SieveCase& c) {
    if (q != 2) return true;
    switch (c.parity) {
    case Parity::odd_sum: return (p.a + p.b) % 2 == 1;
    case Parity::four_divides:
    case Parity::none: return true;
    }
    return true;
}

} // namespace

UnitSieveReport surviving_units(const SieveContext& ctx, const SieveCase& c, const std::vector<std::uint64_t>& primes,
                                const Constraints& constraints) {
    UnitSieveReport report;
    report.sieve_case = c;
    report.primes = primes;
    std::vector<std::uint8_t> alive(kUnitClassCount, 1);
    std::size_t alive_count = kUnitClassCount;

    for (std::uint64_t q : primes) {
        const PrimeTables tables(ctx, q, constraints.modular);
        const bool use_seventh = constraints.seventh_power && tables.has_seventh_roots();
        const std::size_t g = tables.split().g;

        PrimeStep step;
        step.q = q;
        step.seventh_power = use_seventh;
        step.modular = tables.modular_applied();
        step.additive_flags = tables.additive_flags();

        // Admissible character vectors: exact ones hashed, wildcard ones listed.
        std::unordered_set<std::uint64_t> exact;
        std::vector<std::pair<std::uint64_t, std::uint64_t>> wild; // (mask of fixed slots, packed values)
        bool any_admissible = false;
        for (const auto& p : primitive_pairs(q, Parity::none)) {
            ++step.pairs;
            if (!pair_allowed(q, p, c)) continue;
            if (!tables.passes_modular(tables.pair_index(p.a, p.b))) continue;
            if (constraints.c1c2 && q % 7 == 1 && !c.thirteen_divides && !c1c2_condition(p, q)) continue;
            ++step.admissible;
            any_admissible = true;
            if (!use_seventh) continue;
            std::uint64_t packed = 0, mask = 0;
            bool has_zero = false;
            for (std::size_t i = 0; i < g; ++i) {
                const std::uint8_t ch = tables.pair_character(tables.pair_index(p.a, p.b), i);
                packed *= 8;
                mask *= 8;
                if (ch == PrimeTables::kZeroResidue) {
                    has_zero = true;
                    continue;
                }
                const unsigned shift = c.thirteen_divides ? tables.one_minus_zeta_character(i) : 0;
                packed += (ch + 7 - shift) % 7;
                mask += 7;
            }
            if (has_zero) {
                wild.emplace_back(mask, packed);
            } else {
                exact.insert(packed);
            }
        }
        std::sort(wild.begin(), wild.end());
        wild.erase(std::unique(wild.begin(), wild.end()), wild.end());

        std::vector<std::uint8_t> next(kUnitClassCount, 0);
        parallel_for(kUnitClassCount, ctx.options().threads, [&](std::size_t idx) {
            if (!alive[idx]) return;
            if (!use_seventh) {
                next[idx] = any_admissible ? 1 : 0;
                return;
            }
            const UnitClass u = UnitClass::from_index(static_cast<std::uint32_t>(idx));
            std::uint64_t packed = 0;
            for (std::size_t i = 0; i < g; ++i) packed = packed * 8 + tables.unit_character(u, i);
            bool ok = exact.count(packed) != 0;
            for (std::size_t w = 0; !ok && w < wild.size(); ++w) ok = (packed & wild[w].first) == wild[w].second;
            next[idx] = ok ? 1 : 0;
        });
        const auto left = static_cast<std::size_t>(std::count(next.begin(), next.end(), 1));
        step.eliminated = alive_count - left;
        step.survivors = left;
        alive_count = left;
        alive = std::move(next);
        report.steps.push_back(step);
    }
    for (std::uint32_t idx = 0; idx < kUnitClassCount; ++idx) {
        if (alive[idx]) report.survivors.push_back(UnitClass::from_index(idx));
    }
    return report;
}

std::vector<PairResidue> surviving_pairs(const SieveContext& ctx, std::uint64_t q, const UnitClass& u,
                                         const SieveCase& c, const Constraints& constraints) {
    const PrimeTables tables(ctx, q, constraints.modular);
    std::vector<PairResidue> out;
    for (const auto& p : primitive_pairs(q, Parity::none)) {
        if (!pair_allowed(q, p, c)) continue;
        if (!tables.passes_modular(tables.pair_index(p.a, p.b))) continue;
        if (constraints.seventh_power && !tables.seventh_power_condition(u, p, c.thirteen_divides)) continue;
        if (constraints.c1c2 && q % 7 == 1 && !c.thirteen_divides && !c1c2_condition(p, q)) continue;
        out.push_back(p);
    }
    return out;
}

const std::vector<std::uint64_t>& level_raising_primes() {
    static const std::vector<std::uint64_t> primes{5, 17, 19, 23, 29, 37, 41, 43, 61, 83, 89};
    return primes;
}

bool LevelRaisingReport::success() const {
    return !steps.empty() && std::all_of(steps.begin(), steps.end(), [](const LevelRaisingStep& s) { return s.all_forced(); });
}

LevelRaisingReport level_raising_scan(const SieveContext& ctx, const std::vector<std::uint64_t>& qs,
                                      const UnitClass& u, const SieveCase& c, const Constraints& constraints) {
    LevelRaisingReport report;
    for (std::uint64_t q : qs) {
        LevelRaisingStep step;
        step.q = q;
        const bool modular = constraints.modular && ctx.modular_applies(q);
        const bool seventh = constraints.seventh_power && powmod(q % 7, q == kConductor ? 1U : multiplicative_order(q, kConductor), 7) == 1;
        const bool c1c2 = constraints.c1c2 && q % 7 == 1 && !c.thirteen_divides;
        if (modular) step.applied.emplace_back("modular");
        if (seventh) step.applied.emplace_back("unit");
        if (c1c2) step.applied.emplace_back("c1c2");
        if (step.applied.empty()) {
            step.no_information = true;
            report.steps.push_back(step);
            continue;
        }
        const auto pairs = surviving_pairs(ctx, q, u, c, constraints);
        step.survivors = pairs.size();
        step.forced = static_cast<std::size_t>(
            std::count_if(pairs.begin(), pairs.end(), [q](const PairResidue& p) { return (p.a + p.b) % q == 0; }));
        report.steps.push_back(step);
    }
    return report;
}

bool c1c2_condition(const PairResidue& pair, std::uint64_t q) {
    if (q % 7 != 1) throw std::invalid_argument("c1c2_condition: q must be 1 mod 7");
    const std::uint64_t a = pair.a % q, b = pair.b % q;
    const std::uint64_t e = (q - 1) / 7;
    const std::uint64_t s = (a + b) % q;
    if (s != 0) {
        const std::uint64_t c1_7 = mulmod(s, invmod(3, q), q);
        if (powmod(c1_7, e, q) != 1) return false;
    }
    // (a^13 + b^13)/(a + b) = sum_{i=0}^{12} a^(12-i) (-b)^i
    const std::uint64_t minus_b = (q - b) % q;
    std::uint64_t c13 = 0;
    for (unsigned i = 0; i <= 12; ++i) c13 = (c13 + mulmod(powmod(a, 12 - i, q), powmod(minus_b, i, q), q)) % q;
    if (c13 != 0 && powmod(c13, e, q) != 1) return false;
    return true;
}

mpz_class c13_form(const mpz_class& a, const mpz_class& b) {
    mpz_class sum = 0, term;
    for (unsigned i = 0; i <= 12; ++i) {
        mpz_class x, y;
        mpz_pow_ui(x.get_mpz_t(), a.get_mpz_t(), 12 - i);
        const mpz_class mb = -b;
        mpz_pow_ui(y.get_mpz_t(), mb.get_mpz_t(), i);
        sum += x * y;
    }
    return sum;
}

mpz_class descent_coprimality(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (g != 1) throw std::invalid_argument("descent_coprimality: a and b must be coprime");
    if (a + b == 0) throw std::invalid_argument("descent_coprimality: a + b must be nonzero");
    const mpz_class s = a + b;
    const mpz_class c = c13_form(a, b);
    mpz_class d;
    mpz_gcd(d.get_mpz_t(), s.get_mpz_t(), c.get_mpz_t());
    if (d != 1 && d != 13) throw std::logic_error("descent_coprimality: gcd is neither 1 nor 13");
    return d;
}

} // namespace frey
