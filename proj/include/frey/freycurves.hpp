#pragma once

// Weierstrass families E(a, b) over conductor-13 subfields, their reduction
// at subfield primes, and traces of Frobenius.

#include "frey/bivariate.hpp"
#include "frey/primes.hpp"
#include "frey/residue_field.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace frey {

/// Largest residue field in which points are counted.
inline constexpr std::uint64_t kMaxPointCountField = 7921; // 89^2

class CurveFormatError : public std::runtime_error {
public:
    CurveFormatError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

enum class ReductionType { good, multiplicative, additive };
std::string_view reduction_type_name(ReductionType t);

/// Indices into the coefficient array: a1, a2, a3, a4, a6.
inline constexpr std::array<unsigned, 5> kWeierstrassIndices{1, 2, 3, 4, 6};

struct FreyCurveModel {
    std::string name;
    Subfield field = Subfield::full;
    std::array<BivariatePoly, 5> a; ///< a1, a2, a3, a4, a6
    BivariatePoly c4;
    BivariatePoly disc;

    /// Validates subfield membership of every coefficient and caches c4 and the discriminant.
    /// Throws std::invalid_argument on a coefficient outside the declared field.
    static FreyCurveModel make(std::string name, Subfield field, std::array<BivariatePoly, 5> coeffs);

    friend bool operator==(const FreyCurveModel& x, const FreyCurveModel& y) {
        return x.name == y.name && x.field == y.field && x.a == y.a;
    }
};

/// Parses the curve-model text format; throws CurveFormatError or std::invalid_argument.
FreyCurveModel parse_curve_model(std::string_view text);
FreyCurveModel load_curve_model(const std::filesystem::path& path);
std::string format_curve_model(const FreyCurveModel& m);
void save_curve_model(const FreyCurveModel& m, const std::filesystem::path& path);

/// Standard invariants from a1..a6 (works over any commutative ring).
template <class Ring, class T>
void weierstrass_invariants(const Ring& ring, const std::array<T, 5>& a, T& c4, T& disc);

/// Residue field plus a square table (for fields up to kMaxPointCountField).
/// In characteristic 2 it also tabulates inverses and absolute traces.
class PointCountField {
public:
    explicit PointCountField(ResidueField field);
    const ResidueField& field() const { return field_; }
    /// 1 for nonzero squares, -1 for non-squares, 0 for zero.
    int quadratic_character(const FieldElem& x) const;
    /// Characteristic 2 only.
    FieldElem inverse(const FieldElem& x) const;
    /// Characteristic 2 only: Tr to F_2.
    unsigned absolute_trace(const FieldElem& x) const;

private:
    ResidueField field_;
    std::vector<std::int8_t> chi_;
    std::vector<std::uint32_t> inv_;
    std::vector<std::uint8_t> trace_;
};

struct ReducedCurve {
    std::shared_ptr<const PointCountField> field;
    std::array<FieldElem, 5> a; ///< a1, a2, a3, a4, a6
    ReductionType type = ReductionType::good;
};

/// Classifies by vanishing of the reduced discriminant and c4.
ReducedCurve make_reduced_curve(std::shared_ptr<const PointCountField> field, const std::array<FieldElem, 5>& a);

/// Projective point count over the residue field, exhaustive in x: a square test
/// in odd characteristic, an Artin-Schreier trace test in characteristic 2.
std::uint64_t count_points(const ReducedCurve& c);

/// N + 1 - #E; throws std::invalid_argument unless the reduction is good.
std::int64_t trace_of_frobenius(const ReducedCurve& c);

/// A model reduced at one prime of its field: coefficients mapped into the
/// residue field once, ready for repeated specialization.
class ReducedFamily {
public:
    ReducedFamily(const FreyCurveModel& model, const PrimeSplitting& split, std::size_t prime_index);

    const PointCountField& field() const { return *field_; }
    std::uint64_t norm() const { return field_->field().size(); }
    const std::string& label() const { return label_; }

    /// Throws std::invalid_argument if (a, b) = (0, 0) mod q or every coefficient vanishes.
    ReducedCurve specialize(std::uint64_t a, std::uint64_t b) const;

private:
    std::shared_ptr<const PointCountField> field_;
    std::array<ReducedBivariate, 5> coeffs_;
    std::string label_;
};

/// Reduction type of the specialization at (a, b) from the vanishing of c4 and
/// the discriminant; works in residue fields too large for point counting.
ReductionType reduction_type_at(const FreyCurveModel& m, std::uint64_t a, std::uint64_t b, const PrimeSplitting& split,
                                std::size_t prime_index);

ReducedCurve specialize_and_reduce(const FreyCurveModel& m, std::uint64_t a, std::uint64_t b,
                                   const PrimeSplitting& split, const std::string& label);

/// What a pair's curve is compared against: a fixed specialization of a
/// family (the curve E_{1,-1}) or explicit F_7 eigenvalues keyed by prime label.
struct TargetEigensystem {
    struct CurveTarget {
        FreyCurveModel model;
        std::int64_t a = 1;
        std::int64_t b = -1;
    };
    std::variant<CurveTarget, std::map<std::string, unsigned>> source;
    std::string name;

    /// a_P(target) mod 7 at the given prime; throws std::out_of_range if unavailable.
    unsigned value_mod7(const PrimeSplitting& split, std::size_t prime_index) const;
};

/// Mod 7 compatibility at P of the reduced pair curve with the target:
/// good -> traces agree, multiplicative -> target is +-(N+1), additive -> compatible
/// (retained; such pairs are counted as flagged by callers).
bool local_constraint(const ReducedCurve& pair_curve, unsigned target_mod7);

bool local_constraint(const FreyCurveModel& m, const TargetEigensystem& target, std::uint64_t a, std::uint64_t b,
                      const PrimeSplitting& split, const std::string& label);

} // namespace frey

#include "frey/weierstrass_impl.hpp"
