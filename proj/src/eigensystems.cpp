#include "frey/eigensystems.hpp"

#include "frey/modarith.hpp"
#include "frey/primes.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace frey {

namespace {

constexpr unsigned kMinusOne = 6;

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_commas(std::string_view s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        out.push_back(trim(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

bool passes_level_raising(unsigned v, std::uint64_t norm) {
    const unsigned t = static_cast<unsigned>((norm + 1) % 7);
    return v == t || v == (7 - t) % 7;
}

} // namespace

PrimeLabelK PrimeLabelK::parse(std::string_view label) {
    const auto dot = label.find('.');
    if (dot == std::string_view::npos || !all_digits(label.substr(0, dot)) || !all_digits(label.substr(dot + 1)) ||
        dot > 9 || label.size() - dot > 4) {
        throw std::invalid_argument("malformed prime label '" + std::string(label) + "'");
    }
    const std::uint64_t q = std::stoull(std::string(label.substr(0, dot)));
    const unsigned i = static_cast<unsigned>(std::stoul(std::string(label.substr(dot + 1))));
    if (!is_prime(q)) throw std::invalid_argument("prime label '" + std::string(label) + "': " + std::to_string(q) + " is not prime");
    const PrimeSplitting s = split_prime(q, Subfield::cubic);
    if (i < 1 || i > s.g) {
        throw std::invalid_argument("prime label '" + std::string(label) + "': there are " + std::to_string(s.g) +
                                    " primes above " + std::to_string(q));
    }
    PrimeLabelK p;
    p.label = s.labels[i - 1];
    p.q = q;
    p.f = s.f;
    p.norm = s.norm();
    p.steinberg = q == 2 || q == 3 || q == kConductor;
    return p;
}

std::vector<PrimeLabelK> primes_of_k_above(std::uint64_t q) {
    const PrimeSplitting s = split_prime(q, Subfield::cubic);
    std::vector<PrimeLabelK> out;
    for (const auto& l : s.labels) out.push_back(PrimeLabelK::parse(l));
    return out;
}

EigensystemTable::EigensystemTable(std::vector<PrimeLabelK> columns, std::vector<EigensystemRow> rows)
    : columns_(std::move(columns)), rows_(std::move(rows)) {
    std::set<std::string> labels, ids;
    for (const auto& c : columns_) {
        if (!labels.insert(c.label).second) throw std::invalid_argument("duplicate column " + c.label);
    }
    for (const auto& r : rows_) {
        if (!ids.insert(r.id).second) throw std::invalid_argument("duplicate row id '" + r.id + "'");
        if (r.values.size() != columns_.size()) {
            throw std::invalid_argument("row '" + r.id + "' has " + std::to_string(r.values.size()) + " values for " +
                                        std::to_string(columns_.size()) + " columns");
        }
        for (auto v : r.values) {
            if (v > 6) throw std::invalid_argument("row '" + r.id + "': value " + std::to_string(v) + " outside 0..6");
        }
    }
}

std::optional<std::size_t> EigensystemTable::column_index(std::string_view label) const {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (columns_[i].label == label) return i;
    }
    return std::nullopt;
}

const EigensystemRow& EigensystemTable::row(std::string_view id) const {
    for (const auto& r : rows_) {
        if (r.id == id) return r;
    }
    throw std::out_of_range("no row '" + std::string(id) + "'");
}

unsigned EigensystemTable::value(std::string_view id, std::string_view label) const {
    const auto c = column_index(label);
    if (!c) throw std::out_of_range("no column " + std::string(label));
    return row(id).values[*c];
}

EigensystemTable parse_table(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    std::optional<std::vector<PrimeLabelK>> columns;
    std::vector<EigensystemRow> rows;
    std::set<std::string> ids;

    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw TableFormatError(line_no, "expected '<key>: <values>'");
        const std::string key = trim(line.substr(0, colon));
        const std::string body = line.substr(colon + 1);

        if (!columns) {
            if (key != "primes") throw TableFormatError(line_no, "first entry must be 'primes: <label>,...'");
            columns.emplace();
            std::set<std::string> seen;
            for (const auto& l : split_commas(body)) {
                try {
                    columns->push_back(PrimeLabelK::parse(l));
                } catch (const std::invalid_argument& e) {
                    throw TableFormatError(line_no, std::string("unknown prime label: ") + e.what());
                }
                if (!seen.insert(columns->back().label).second) throw TableFormatError(line_no, "duplicate prime label " + l);
            }
            continue;
        }
        if (key.empty()) throw TableFormatError(line_no, "empty row id");
        if (key == "primes") throw TableFormatError(line_no, "repeated 'primes' header");
        if (!ids.insert(key).second) throw TableFormatError(line_no, "duplicate row id '" + key + "'");
        EigensystemRow row{key, {}};
        const auto fields = split_commas(body);
        for (std::size_t k = 0; k < fields.size(); ++k) {
            const std::string& v = fields[k];
            if (v.empty()) throw TableFormatError(line_no, "missing value in column " + std::to_string(k + 1));
            if (!all_digits(v) || v.size() > 3 || std::stoul(v) > 6) {
                throw TableFormatError(line_no, "value '" + v + "' outside 0..6");
            }
            row.values.push_back(static_cast<std::uint8_t>(std::stoul(v)));
        }
        if (row.values.size() < columns->size()) {
            throw TableFormatError(line_no, "missing value: row '" + key + "' has " + std::to_string(row.values.size()) +
                                                " of " + std::to_string(columns->size()) + " values");
        }
        if (row.values.size() > columns->size()) {
            throw TableFormatError(line_no, "row '" + key + "' has more values than columns");
        }
        rows.push_back(std::move(row));
    }
    if (!columns) throw TableFormatError(line_no, "missing 'primes:' header");
    return EigensystemTable(std::move(*columns), std::move(rows));
}

EigensystemTable load_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open eigensystem table " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_table(buf.str());
}

std::string format_table(const EigensystemTable& t) {
    std::ostringstream out;
    out << "primes: ";
    for (std::size_t i = 0; i < t.columns().size(); ++i) out << (i ? "," : "") << t.columns()[i].label;
    out << "\n";
    for (const auto& r : t.rows()) {
        out << r.id << ": ";
        for (std::size_t i = 0; i < r.values.size(); ++i) out << (i ? "," : "") << unsigned(r.values[i]);
        out << "\n";
    }
    return out.str();
}

void save_table(const EigensystemTable& t, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write eigensystem table " + path.string());
    out << format_table(t);
}

int chi_value(const PrimeLabelK& p) {
    if (p.q == kConductor) throw std::invalid_argument("chi_value: chi ramifies at " + p.label);
    const bool residue = powmod(p.q % kConductor, (kConductor - 1) / 2, kConductor) == 1;
    return (residue || p.f % 2 == 0) ? 1 : -1;
}

unsigned reducible_template(TemplateKind kind, const PrimeLabelK& p) {
    if (p.steinberg) throw std::invalid_argument("reducible_template: " + p.label + " divides the level");
    const unsigned base = static_cast<unsigned>((p.norm + 1) % 7);
    if (kind == TemplateKind::trivial || chi_value(p) == 1) return base;
    return (7 - base) % 7;
}

std::vector<std::string> level_raising_filter(const EigensystemTable& t, const std::vector<PrimeLabelK>& primes) {
    std::vector<std::pair<std::size_t, std::uint64_t>> cols;
    for (const auto& p : primes) {
        if (p.steinberg) throw std::invalid_argument("level_raising_filter: " + p.label + " divides the level");
        const auto c = t.column_index(p.label);
        if (!c) throw std::invalid_argument("level_raising_filter: table has no column " + p.label);
        cols.emplace_back(*c, p.norm);
    }
    std::vector<std::string> out;
    for (const auto& r : t.rows()) {
        const bool ok = std::all_of(cols.begin(), cols.end(),
                                    [&](const auto& c) { return passes_level_raising(r.values[c.first], c.second); });
        if (ok) out.push_back(r.id);
    }
    return out;
}

std::vector<PrimeLabelK> default_filter_primes() {
    auto out = primes_of_k_above(5);
    for (auto& p : primes_of_k_above(83)) out.push_back(std::move(p));
    return out;
}

std::string_view eigen_class_name(EigenClass c) {
    switch (c) {
    case EigenClass::E1: return "E1";
    case EigenClass::E2: return "E2";
    case EigenClass::E1chi: return "E1chi";
    case EigenClass::E2chi: return "E2chi";
    case EigenClass::unclassified: return "unclassified";
    }
    return "?";
}

std::vector<Classification> classify_survivors(const EigensystemTable& t, const std::vector<std::string>& ids) {
    const auto c2 = t.column_index("2.1");
    const auto c3 = t.column_index("3.1");
    const auto c13 = t.column_index("13.1");
    std::vector<Classification> out;
    for (const auto& id : ids) {
        Classification cl{id, EigenClass::unclassified};
        const EigensystemRow& r = t.row(id);
        if (c2 && c3 && c13) {
            const auto matches = [&](TemplateKind kind) {
                for (std::size_t i = 0; i < t.columns().size(); ++i) {
                    const auto& p = t.columns()[i];
                    if (!p.steinberg && r.values[i] != reducible_template(kind, p)) return false;
                }
                return true;
            };
            const std::array<unsigned, 3> triple{r.values[*c2], r.values[*c3], r.values[*c13]};
            const bool trivial = matches(TemplateKind::trivial);
            const bool chi = matches(TemplateKind::chi);
            if (trivial && triple == std::array<unsigned, 3>{1, 1, 0}) cl.cls = EigenClass::E1;
            else if (trivial && triple == std::array<unsigned, 3>{1, kMinusOne, 0}) cl.cls = EigenClass::E2;
            else if (chi && triple == std::array<unsigned, 3>{kMinusOne, 1, 0}) cl.cls = EigenClass::E1chi;
            else if (chi && triple == std::array<unsigned, 3>{kMinusOne, kMinusOne, 0}) cl.cls = EigenClass::E2chi;
        }
        out.push_back(cl);
    }
    return out;
}

EigensystemRow twist_by_chi(const EigensystemTable& t, const EigensystemRow& row) {
    EigensystemRow out{row.id, row.values};
    for (std::size_t i = 0; i < t.columns().size(); ++i) {
        const auto& p = t.columns()[i];
        if (p.q == kConductor) {
            out.values[i] = 0;
        } else if (chi_value(p) == -1) {
            out.values[i] = static_cast<std::uint8_t>((7 - row.values[i]) % 7);
        }
    }
    return out;
}

std::vector<std::string> eisenstein_scan(const EigensystemTable& t, std::uint64_t norm_bound,
                                         const std::vector<std::string>& exclusions) {
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < t.columns().size(); ++i) {
        const auto& p = t.columns()[i];
        if (p.steinberg || p.norm >= norm_bound) continue;
        if (std::find(exclusions.begin(), exclusions.end(), p.label) != exclusions.end()) continue;
        cols.push_back(i);
    }
    std::vector<std::string> out;
    for (const auto& r : t.rows()) {
        const bool ok = std::all_of(cols.begin(), cols.end(), [&](std::size_t i) {
            return r.values[i] == (t.columns()[i].norm + 1) % 7;
        });
        if (ok) out.push_back(r.id);
    }
    return out;
}

std::vector<PrimeLabelK> default_table_columns() {
    std::vector<PrimeLabelK> cols;
    for (std::uint64_t q : {2, 3, 13, 5, 31, 83}) {
        for (auto& p : primes_of_k_above(q)) cols.push_back(std::move(p));
    }
    return cols;
}

EigensystemTable synthetic_fixture(std::size_t noise_rows, bool include_templates) {
    const auto cols = default_table_columns();
    std::vector<EigensystemRow> rows;

    if (include_templates) {
        struct Spec {
            const char* id;
            TemplateKind kind;
            std::array<unsigned, 3> triple;
        };
        const std::array<Spec, 4> specs{{{"E1", TemplateKind::trivial, {1, 1, 0}},
                                         {"E2", TemplateKind::trivial, {1, kMinusOne, 0}},
                                         {"E1chi", TemplateKind::chi, {kMinusOne, 1, 0}},
                                         {"E2chi", TemplateKind::chi, {kMinusOne, kMinusOne, 0}}}};
        for (const auto& s : specs) {
            EigensystemRow r{s.id, {}};
            for (const auto& p : cols) {
                if (p.q == 2) r.values.push_back(static_cast<std::uint8_t>(s.triple[0]));
                else if (p.q == 3) r.values.push_back(static_cast<std::uint8_t>(s.triple[1]));
                else if (p.q == kConductor) r.values.push_back(static_cast<std::uint8_t>(s.triple[2]));
                else r.values.push_back(static_cast<std::uint8_t>(reducible_template(s.kind, p)));
            }
            rows.push_back(std::move(r));
        }
    }

    std::vector<std::size_t> filter_cols;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (cols[i].q == 5 || cols[i].q == 83) filter_cols.push_back(i);
    }
    std::mt19937 gen(0x13C0DE);
    for (std::size_t k = 0; k < noise_rows; ++k) {
        EigensystemRow r{"noise" + std::to_string(k + 1), {}};
        for (std::size_t i = 0; i < cols.size(); ++i) r.values.push_back(static_cast<std::uint8_t>(gen() % 7));
        const std::size_t c = filter_cols[k % filter_cols.size()];
        const unsigned t = static_cast<unsigned>((cols[c].norm + 1) % 7);
        unsigned v = (t + 1) % 7;
        if (passes_level_raising(v, cols[c].norm)) v = (t + 2) % 7;
        r.values[c] = static_cast<std::uint8_t>(v);
        rows.push_back(std::move(r));
    }
    return EigensystemTable(cols, std::move(rows));
}

} // namespace frey
