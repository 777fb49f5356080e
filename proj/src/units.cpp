#include "frey/units.hpp"

#include "frey/modarith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace frey {

static_assert(std::gcd(26, 7) == 1, "torsion units must be 7th powers");

std::uint32_t UnitClass::index() const {
    std::uint32_t idx = 0;
    for (auto d : e) idx = idx * 7 + d;
    return idx;
}

UnitClass UnitClass::from_index(std::uint32_t idx) {
    if (idx >= kUnitClassCount) throw std::out_of_range("UnitClass::from_index");
    UnitClass u;
    for (unsigned k = kUnitRank; k-- > 0;) {
        u.e[k] = static_cast<std::uint8_t>(idx % 7);
        idx /= 7;
    }
    return u;
}

std::string UnitClass::to_string() const {
    std::string s;
    for (auto d : e) s += static_cast<char>('0' + d);
    return s;
}

UnitClass UnitClass::parse(const std::string& digits) {
    if (digits.size() != kUnitRank) throw std::invalid_argument("unit class must have 5 base-7 digits");
    UnitClass u;
    for (unsigned k = 0; k < kUnitRank; ++k) {
        if (digits[k] < '0' || digits[k] > '6') throw std::invalid_argument("unit class digit out of range 0..6");
        u.e[k] = static_cast<std::uint8_t>(digits[k] - '0');
    }
    return u;
}

UnitClass operator+(const UnitClass& a, const UnitClass& b) {
    UnitClass r;
    for (unsigned k = 0; k < kUnitRank; ++k) r.e[k] = static_cast<std::uint8_t>((a.e[k] + b.e[k]) % 7);
    return r;
}

std::vector<UnitClass> unit_class_enumerate() {
    std::vector<UnitClass> out;
    out.reserve(kUnitClassCount);
    for (std::uint32_t i = 0; i < kUnitClassCount; ++i) out.push_back(UnitClass::from_index(i));
    return out;
}

CyclotomicInt cyclotomic_unit(unsigned k) {
    CyclotomicInt u;
    for (unsigned i = 0; i < k; ++i) u += CyclotomicInt::zeta_power(i);
    return u;
}

UnitBasis::UnitBasis() {
    for (unsigned k = 2; k <= 6; ++k) generators_.push_back(cyclotomic_unit(k));
}

UnitBasis::UnitBasis(std::vector<CyclotomicInt> generators) : generators_(std::move(generators)) {
    if (generators_.size() != kUnitRank) throw std::invalid_argument("unit basis needs exactly five generators");
    for (std::size_t k = 0; k < generators_.size(); ++k) {
        const mpz_class n = generators_[k].norm();
        if (n != 1 && n != -1) {
            throw std::invalid_argument("generator " + std::to_string(k + 2) + " is not a unit (norm " + n.get_str() + ")");
        }
    }
}

CyclotomicInt UnitBasis::value(const UnitClass& u) const {
    CyclotomicInt r(1L);
    for (unsigned k = 0; k < kUnitRank; ++k) {
        if (u.e[k]) r *= generators_[k].pow(u.e[k]);
    }
    return r;
}

unsigned CharacterPrime::character(const CyclotomicInt& x) const {
    return field.seventh_power_character(reduce_mod_prime(x, split, index, field));
}

unsigned rank_mod7(std::vector<std::vector<unsigned>> rows) {
    unsigned rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] % 7 == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        const unsigned inv = static_cast<unsigned>(invmod(rows[rank][c], 7));
        for (auto& v : rows[rank]) v = v * inv % 7;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] % 7 == 0) continue;
            const unsigned factor = rows[r][c] % 7;
            for (std::size_t k = 0; k < cols; ++k) rows[r][k] = (rows[r][k] + 7 * 7 - factor * rows[rank][k]) % 7;
        }
        ++rank;
    }
    return rank;
}

namespace {

using Mat5 = std::array<std::array<unsigned, kUnitRank>, kUnitRank>;

bool invert_mod7(const Mat5& m, Mat5& inv) {
    std::array<std::array<unsigned, 2 * kUnitRank>, kUnitRank> a{};
    for (unsigned r = 0; r < kUnitRank; ++r) {
        for (unsigned c = 0; c < kUnitRank; ++c) a[r][c] = m[r][c] % 7;
        a[r][kUnitRank + r] = 1;
    }
    for (unsigned c = 0; c < kUnitRank; ++c) {
        unsigned p = c;
        while (p < kUnitRank && a[p][c] == 0) ++p;
        if (p == kUnitRank) return false;
        std::swap(a[p], a[c]);
        const unsigned s = static_cast<unsigned>(invmod(a[c][c], 7));
        for (auto& v : a[c]) v = v * s % 7;
        for (unsigned r = 0; r < kUnitRank; ++r) {
            if (r == c || a[r][c] == 0) continue;
            const unsigned factor = a[r][c];
            for (unsigned k = 0; k < 2 * kUnitRank; ++k) a[r][k] = (a[r][k] + 49 - factor * a[c][k]) % 7;
        }
    }
    for (unsigned r = 0; r < kUnitRank; ++r) {
        for (unsigned c = 0; c < kUnitRank; ++c) inv[r][c] = a[r][kUnitRank + c];
    }
    return true;
}

} // namespace

UnitLogMap::UnitLogMap(const UnitBasis& basis) : UnitLogMap(basis, Options{}) {}

UnitLogMap::UnitLogMap(const UnitBasis& basis, Options options) {
    std::vector<std::uint64_t> candidates = options.primes;
    if (candidates.empty()) {
        for (std::uint64_t q : find_sieve_primes(options.search_bound)) {
            if (std::find(options.exclude.begin(), options.exclude.end(), q) == options.exclude.end()) {
                candidates.push_back(q);
            }
        }
    }
    if (candidates.size() > options.prime_budget) candidates.resize(options.prime_budget);

    std::vector<std::vector<unsigned>> rows;
    for (std::uint64_t q : candidates) {
        if (primes_.size() == kUnitRank) break;
        if (residue_degree(q, Subfield::full) * std::log2(static_cast<double>(q)) >= 62.0) continue;
        const PrimeSplitting split = split_prime(q, Subfield::full);
        if (split.ramified) continue;
        for (std::size_t i = 0; i < split.g && primes_.size() < kUnitRank; ++i) {
            CharacterPrime cp{split, i, split.residue_field(i)};
            if (!cp.field.has_seventh_roots()) break;
            std::vector<unsigned> row;
            for (const auto& u : basis.generators()) row.push_back(cp.character(u));
            auto trial = rows;
            trial.push_back(row);
            if (rank_mod7(trial) == trial.size()) {
                rows = std::move(trial);
                primes_.push_back(std::move(cp));
            }
        }
    }
    if (primes_.size() < kUnitRank) {
        throw std::runtime_error("unit generators are not independent modulo 7th powers at the auxiliary primes");
    }
    for (unsigned r = 0; r < kUnitRank; ++r) {
        for (unsigned c = 0; c < kUnitRank; ++c) matrix_[r][c] = rows[r][c];
    }
    if (!invert_mod7(matrix_, inverse_)) throw std::logic_error("UnitLogMap: character matrix is singular");
}

UnitClass UnitLogMap::class_of(const CyclotomicInt& x) const {
    std::array<unsigned, kUnitRank> v{};
    for (unsigned r = 0; r < kUnitRank; ++r) v[r] = primes_[r].character(x);
    UnitClass u;
    for (unsigned k = 0; k < kUnitRank; ++k) {
        unsigned s = 0;
        for (unsigned r = 0; r < kUnitRank; ++r) s += inverse_[k][r] * v[r];
        u.e[k] = static_cast<std::uint8_t>(s % 7);
    }
    return u;
}

CyclotomicInt epsilon0_value() {
    const CyclotomicInt one_minus_zeta = CyclotomicInt(1L) - CyclotomicInt::zeta();
    try {
        return CyclotomicInt(28561L).exact_div(one_minus_zeta.pow(48));
    } catch (const std::domain_error& e) {
        throw std::logic_error(std::string("epsilon0: exact division failed: ") + e.what());
    }
}

Epsilon0 epsilon0(const UnitLogMap& logs) {
    Epsilon0 out;
    out.value = epsilon0_value();
    out.cls = logs.class_of(out.value);
    return out;
}

bool epsilon0_identity_holds(const CyclotomicInt& eps) {
    const CyclotomicInt one_minus_zeta = CyclotomicInt(1L) - CyclotomicInt::zeta();
    const CyclotomicInt lhs = CyclotomicInt(28561L) - CyclotomicInt(28561L) * CyclotomicInt::zeta();
    return lhs == eps * one_minus_zeta.pow(49);
}

} // namespace frey
