#pragma once

// Tables of mod-7 Hecke eigensystems indexed by primes of the cubic field K,
// the level-raising elimination, and classification against the reducible
// templates and the Steinberg triples at 2, 3 and the prime above 13.
//
// Table format:
//   primes: 2.1,3.1,13.1,5.1,...
//   <row-id>: v,v,...        (v in 0..6)
// with '#' starting a comment.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace frey {

struct PrimeLabelK {
    std::string label;
    std::uint64_t q = 0;
    unsigned f = 0;
    std::uint64_t norm = 0;
    bool steinberg = false; ///< q in {2, 3} or the prime above 13

    /// Throws std::invalid_argument for malformed labels or indices past the splitting.
    static PrimeLabelK parse(std::string_view label);
};

/// Every prime of K above q, in label order.
std::vector<PrimeLabelK> primes_of_k_above(std::uint64_t q);

class TableFormatError : public std::runtime_error {
public:
    TableFormatError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct EigensystemRow {
    std::string id;
    std::vector<std::uint8_t> values;
};

class EigensystemTable {
public:
    EigensystemTable() = default;
    /// Validates every invariant; throws std::invalid_argument.
    EigensystemTable(std::vector<PrimeLabelK> columns, std::vector<EigensystemRow> rows);

    const std::vector<PrimeLabelK>& columns() const { return columns_; }
    const std::vector<EigensystemRow>& rows() const { return rows_; }
    std::optional<std::size_t> column_index(std::string_view label) const;
    const EigensystemRow& row(std::string_view id) const; ///< throws std::out_of_range
    unsigned value(std::string_view id, std::string_view label) const;

private:
    std::vector<PrimeLabelK> columns_;
    std::vector<EigensystemRow> rows_;
};

EigensystemTable parse_table(std::string_view text);
EigensystemTable load_table(const std::filesystem::path& path);
std::string format_table(const EigensystemTable& t);
void save_table(const EigensystemTable& t, const std::filesystem::path& path);

/// (q | 13)^f; throws std::invalid_argument above 13.
int chi_value(const PrimeLabelK& p);

enum class TemplateKind { trivial, chi };

/// (N + 1) or chi(P)(N + 1) mod 7; throws std::invalid_argument at Steinberg primes.
unsigned reducible_template(TemplateKind kind, const PrimeLabelK& p);

/// Row ids, in table order, whose value at every listed prime is +-(N + 1) mod 7.
/// Throws std::invalid_argument for a Steinberg prime or one missing from the table.
std::vector<std::string> level_raising_filter(const EigensystemTable& t, const std::vector<PrimeLabelK>& primes);

/// The three primes above 5 and the three above 83.
std::vector<PrimeLabelK> default_filter_primes();

enum class EigenClass { E1, E2, E1chi, E2chi, unclassified };
std::string_view eigen_class_name(EigenClass c);

struct Classification {
    std::string id;
    EigenClass cls = EigenClass::unclassified;
};

/// Labels each row by its template at the non-Steinberg columns and its
/// (a_2, a_3, a_13) triple: E1 (1,1,0), E2 (1,-1,0), E1chi (-1,1,0), E2chi (-1,-1,0).
/// Rows lacking any of the three Steinberg columns are unclassified.
std::vector<Classification> classify_survivors(const EigensystemTable& t, const std::vector<std::string>& ids);

/// chi(P) * value away from 13, and 0 at the prime above 13.
EigensystemRow twist_by_chi(const EigensystemTable& t, const EigensystemRow& row);

/// Rows with value 1 + N(P) at every non-Steinberg, non-excluded column of norm < norm_bound.
std::vector<std::string> eisenstein_scan(const EigensystemTable& t, std::uint64_t norm_bound,
                                         const std::vector<std::string>& exclusions = {});

/// Columns 2.1, 3.1, 13.1, then the primes above 5, 31 and 83.
std::vector<PrimeLabelK> default_table_columns();

/// The four template rows E1, E2, E1chi, E2chi followed by `noise_rows`
/// deterministic rows, each failing the default filter at some prime.
EigensystemTable synthetic_fixture(std::size_t noise_rows = 39, bool include_templates = true);

} // namespace frey
