#pragma once

// The modular unit sieve and the level-raising pair scan.
//
// Descent writes a + zeta b = eps * beta^7, or eps * (1 - zeta) * beta^7 when
// 13 | a + b. At a prime P of Z[zeta] with 7 | N(P) - 1 this forces
// (a + zeta b) eps^-1 (1 - zeta)^-delta to be a 7th power modulo P. The Frey
// curve congruence adds a constraint on (a, b) modulo q at primes of the
// curve's field. A unit class survives a prime q if some primitive pair mod q
// satisfies every selected constraint at every prime above q.

#include "frey/freycurves.hpp"
#include "frey/primes.hpp"
#include "frey/units.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace frey {

enum class Parity { odd_sum, four_divides, none };
std::string_view parity_name(Parity p);

struct SieveCase {
    bool thirteen_divides = false; ///< selects the extra (1 - zeta) factor
    Parity parity = Parity::none;
};

struct PairResidue {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    friend bool operator==(const PairResidue&, const PairResidue&) = default;
    friend auto operator<=>(const PairResidue&, const PairResidue&) = default;
};

struct Constraints {
    bool seventh_power = true;
    bool modular = true;
    bool c1c2 = false;
};

/// Primitive pairs mod q in lexicographic order, restricted at q = 2 by the parity tag.
std::vector<PairResidue> primitive_pairs(std::uint64_t q, Parity parity);

class SieveContext {
public:
    struct Options {
        std::vector<std::uint64_t> level_primes{2, 3, 13}; ///< no modular information here
        unsigned threads = 1;
    };

    SieveContext(UnitBasis basis, std::optional<FreyCurveModel> model, std::optional<TargetEigensystem> target);
    SieveContext(UnitBasis basis, std::optional<FreyCurveModel> model, std::optional<TargetEigensystem> target,
                 Options options);

    const UnitBasis& basis() const { return basis_; }
    const Options& options() const { return options_; }
    bool has_model() const { return model_.has_value(); }
    const FreyCurveModel& model() const;

    bool modular_applies(std::uint64_t q) const; ///< q is not a level prime
    bool is_level_prime(std::uint64_t q) const;

private:
    UnitBasis basis_;
    std::optional<FreyCurveModel> model_;
    std::optional<TargetEigensystem> target_;
    Options options_;

    friend class PrimeTables;
};

/// Per-prime precomputation: 7th-power characters of a + zeta b for every
/// pair, of the generators and of 1 - zeta, and the modular pass table.
class PrimeTables {
public:
    static constexpr std::uint8_t kZeroResidue = 7;

    /// Throws std::invalid_argument if the modular constraint is requested at a
    /// non-level prime and the context has no curve model.
    PrimeTables(const SieveContext& ctx, std::uint64_t q, bool want_modular);

    std::uint64_t q() const { return q_; }
    const PrimeSplitting& split() const { return split_; }
    bool has_seventh_roots() const { return has_seventh_; }
    bool modular_applied() const { return modular_applied_; }

    std::size_t pair_index(std::uint32_t a, std::uint32_t b) const { return a * q_ + b; }
    /// Character of a + zeta b at full-field prime i, or kZeroResidue.
    std::uint8_t pair_character(std::size_t pair, std::size_t i) const { return pair_chars_[pair * split_.g + i]; }
    /// Character of the unit class at prime i.
    unsigned unit_character(const UnitClass& u, std::size_t i) const;
    unsigned one_minus_zeta_character(std::size_t i) const { return omz_chars_[i]; }

    bool passes_modular(std::size_t pair) const { return !modular_applied_ || modular_pass_[pair]; }
    /// Pairs whose curve reduced additively somewhere above q (kept, flagged).
    std::size_t additive_flags() const { return additive_flags_; }

    bool seventh_power_condition(const UnitClass& u, const PairResidue& p, bool thirteen_divides) const;

private:
    std::uint64_t q_;
    PrimeSplitting split_;
    bool has_seventh_ = false;
    bool modular_applied_ = false;
    std::vector<std::uint8_t> pair_chars_;
    std::vector<std::array<unsigned, kUnitRank>> gen_chars_;
    std::vector<unsigned> omz_chars_;
    std::vector<bool> modular_pass_;
    std::size_t additive_flags_ = 0;
};

/// Per-pair, per-prime form of the 7th-power test; true when 7 does not divide
/// N(P) - 1 and when a + zeta b vanishes at P (that case is left to the
/// 7th power of beta).
bool seventh_power_condition(const SieveContext& ctx, const UnitClass& u, const PairResidue& pair, const SieveCase& c,
                             const PrimeSplitting& split, std::size_t prime_index);

struct PrimeStep {
    std::uint64_t q = 0;
    bool seventh_power = false;  ///< 7th-power characters were informative
    bool modular = false;        ///< curve congruence applied
    std::size_t pairs = 0;       ///< candidate pairs mod q
    std::size_t admissible = 0;  ///< pairs passing the pair-only constraints
    std::size_t eliminated = 0;  ///< unit classes removed at this step
    std::size_t survivors = 0;   ///< unit classes left after this step
    std::size_t additive_flags = 0;
};

struct UnitSieveReport {
    SieveCase sieve_case;
    std::vector<std::uint64_t> primes;
    std::vector<PrimeStep> steps;
    std::vector<UnitClass> survivors; ///< sorted
};

UnitSieveReport surviving_units(const SieveContext& ctx, const SieveCase& c, const std::vector<std::uint64_t>& primes,
                                const Constraints& constraints = {});

/// Exact set of primitive pairs mod q passing the selected constraints for unit u.
std::vector<PairResidue> surviving_pairs(const SieveContext& ctx, std::uint64_t q, const UnitClass& u,
                                         const SieveCase& c, const Constraints& constraints);

struct LevelRaisingStep {
    std::uint64_t q = 0;
    bool no_information = false;
    std::vector<std::string> applied; ///< names of the constraints that applied
    std::size_t survivors = 0;
    std::size_t forced = 0; ///< survivors with q | a + b
    bool all_forced() const { return !no_information && survivors == forced; }
};

struct LevelRaisingReport {
    std::vector<LevelRaisingStep> steps;
    bool success() const;
};

LevelRaisingReport level_raising_scan(const SieveContext& ctx, const std::vector<std::uint64_t>& qs,
                                      const UnitClass& u, const SieveCase& c, const Constraints& constraints);

/// The primes q at which the level-raising scan forces q | a + b.
const std::vector<std::uint64_t>& level_raising_primes();

/// Existence of c1, c2 mod q with a + b = 3 c1^7 and (a^13 + b^13)/(a + b) = c2^7;
/// each component holds vacuously when its left side vanishes. Requires q = 1 mod 7.
bool c1c2_condition(const PairResidue& pair, std::uint64_t q);

/// (a^13 + b^13)/(a + b) as an exact integer.
mpz_class c13_form(const mpz_class& a, const mpz_class& b);

/// gcd(a + b, (a^13 + b^13)/(a + b)) for coprime a, b with a + b != 0; always 1 or 13.
mpz_class descent_coprimality(const mpz_class& a, const mpz_class& b);

} // namespace frey
