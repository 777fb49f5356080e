#include "frey/freycurves.hpp"

#include "frey/modarith.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace frey {

std::string_view reduction_type_name(ReductionType t) {
    switch (t) {
    case ReductionType::good: return "good";
    case ReductionType::multiplicative: return "multiplicative";
    case ReductionType::additive: return "additive";
    }
    return "?";
}

namespace {

struct PolyRing {
    BivariatePoly add(const BivariatePoly& x, const BivariatePoly& y) const { return x + y; }
    BivariatePoly sub(const BivariatePoly& x, const BivariatePoly& y) const { return x - y; }
    BivariatePoly mul(const BivariatePoly& x, const BivariatePoly& y) const { return x * y; }
    BivariatePoly scale(const BivariatePoly& x, std::int64_t s) const { return CyclotomicInt(static_cast<long>(s)) * x; }
};

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char ch : s) {
        if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
    }
    return out;
}

int coefficient_slot(unsigned i) {
    const auto it = std::find(kWeierstrassIndices.begin(), kWeierstrassIndices.end(), i);
    return it == kWeierstrassIndices.end() ? -1 : static_cast<int>(it - kWeierstrassIndices.begin());
}

unsigned parse_unsigned(const std::string& s, int line) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw CurveFormatError(line, "expected a non-negative exponent, got '" + s + "'");
    }
    return static_cast<unsigned>(std::stoul(s));
}

} // namespace

FreyCurveModel FreyCurveModel::make(std::string name, Subfield field, std::array<BivariatePoly, 5> coeffs) {
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& [e, c] : coeffs[k].terms()) {
            if (!lies_in(c, field)) {
                throw std::invalid_argument("coefficient of a" + std::to_string(kWeierstrassIndices[k]) +
                                            " is not fixed by the Galois group of the " +
                                            std::string(subfield_name(field)) + " field");
            }
        }
    }
    FreyCurveModel m;
    m.name = std::move(name);
    m.field = field;
    m.a = std::move(coeffs);
    weierstrass_invariants(PolyRing{}, m.a, m.c4, m.disc);
    return m;
}

FreyCurveModel parse_curve_model(std::string_view text) {
    std::optional<std::string> name;
    std::optional<Subfield> field;
    std::array<BivariatePoly, 5> coeffs;
    std::vector<std::pair<int, CyclotomicInt>> term_lines;

    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;

        const auto plus_eq = line.find("+=");
        if (plus_eq == std::string::npos) {
            const auto eq = line.find('=');
            if (eq == std::string::npos) throw CurveFormatError(line_no, "expected 'key = value' or a coefficient term");
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key == "name") {
                name = value;
            } else if (key == "field") {
                try {
                    field = parse_subfield(value);
                } catch (const std::invalid_argument& e) {
                    throw CurveFormatError(line_no, e.what());
                }
            } else {
                throw CurveFormatError(line_no, "unknown header key '" + key + "'");
            }
            continue;
        }

        const std::string lhs = strip_spaces(line.substr(0, plus_eq));
        const std::string rhs = strip_spaces(line.substr(plus_eq + 2));
        if (lhs.size() != 2 || lhs[0] != 'a' || coefficient_slot(static_cast<unsigned>(lhs[1] - '0')) < 0) {
            throw CurveFormatError(line_no, "unknown coefficient '" + lhs + "' (expected a1, a2, a3, a4 or a6)");
        }
        const auto open = rhs.find('(');
        const auto comma = rhs.find(',');
        const auto close = rhs.find(')');
        if (open != 0 || comma == std::string::npos || close == std::string::npos || comma > close) {
            throw CurveFormatError(line_no, "expected '(da, db) [c0,...,c11]'");
        }
        const unsigned da = parse_unsigned(rhs.substr(1, comma - 1), line_no);
        const unsigned db = parse_unsigned(rhs.substr(comma + 1, close - comma - 1), line_no);
        const std::string coords = rhs.substr(close + 1);
        if (coords.size() < 2 || coords.front() != '[' || coords.back() != ']') {
            throw CurveFormatError(line_no, "coefficient must be written as [c0,...,c11]");
        }
        CyclotomicInt c;
        try {
            c = CyclotomicInt::parse(coords);
        } catch (const std::invalid_argument& e) {
            throw CurveFormatError(line_no, e.what());
        }
        coeffs[static_cast<std::size_t>(coefficient_slot(static_cast<unsigned>(lhs[1] - '0')))].add_term(da, db, c);
        term_lines.emplace_back(line_no, c);
    }
    if (!name) throw CurveFormatError(line_no, "missing 'name = ...' header");
    if (!field) throw CurveFormatError(line_no, "missing 'field = ...' header");
    for (const auto& [ln, c] : term_lines) {
        if (!lies_in(c, *field)) {
            throw CurveFormatError(ln, "coefficient is not fixed by the Galois group of the " +
                                           std::string(subfield_name(*field)) + " field");
        }
    }
    return FreyCurveModel::make(*name, *field, std::move(coeffs));
}

FreyCurveModel load_curve_model(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open curve model " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_curve_model(buf.str());
}

std::string format_curve_model(const FreyCurveModel& m) {
    std::ostringstream out;
    out << "name = " << m.name << "\n";
    out << "field = " << subfield_name(m.field) << "\n";
    for (std::size_t k = 0; k < m.a.size(); ++k) {
        for (const auto& [e, c] : m.a[k].terms()) {
            out << "a" << kWeierstrassIndices[k] << " += (" << e.first << ", " << e.second << ") [" << c.to_string()
                << "]\n";
        }
    }
    return out.str();
}

void save_curve_model(const FreyCurveModel& m, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write curve model " + path.string());
    out << format_curve_model(m);
}

ReducedFamily::ReducedFamily(const FreyCurveModel& model, const PrimeSplitting& split, std::size_t prime_index) {
    if (split.subfield != model.field) throw std::invalid_argument("ReducedFamily: prime is not in the model's field");
    field_ = std::make_shared<const PointCountField>(split.residue_field(prime_index));
    label_ = split.labels.at(prime_index);
    const ResidueField& f = field_->field();
    for (std::size_t k = 0; k < 5; ++k) {
        for (const auto& [e, c] : model.a[k].terms()) {
            coeffs_[k].terms.push_back({e.first, e.second, reduce_mod_prime(c, split, prime_index, f)});
        }
    }
}

ReducedCurve ReducedFamily::specialize(std::uint64_t a, std::uint64_t b) const {
    const ResidueField& f = field_->field();
    const std::uint64_t q = f.characteristic();
    a %= q;
    b %= q;
    if (a == 0 && b == 0) throw std::invalid_argument("specialize: (a, b) = (0, 0) mod q is not primitive");
    std::array<FieldElem, 5> coeffs;
    bool all_zero = true;
    for (std::size_t k = 0; k < 5; ++k) {
        coeffs[k] = coeffs_[k].evaluate(f, a, b);
        all_zero = all_zero && f.is_zero(coeffs[k]);
    }
    if (all_zero) throw std::invalid_argument("specialize: every coefficient vanishes at this pair");
    return make_reduced_curve(field_, coeffs);
}

ReductionType reduction_type_at(const FreyCurveModel& m, std::uint64_t a, std::uint64_t b, const PrimeSplitting& split,
                                std::size_t prime_index) {
    if (split.subfield != m.field) throw std::invalid_argument("reduction_type_at: prime is not in the model's field");
    const ResidueField f = split.residue_field(prime_index);
    const auto reduce = [&](const BivariatePoly& p) {
        ReducedBivariate r;
        for (const auto& [e, c] : p.terms()) r.terms.push_back({e.first, e.second, reduce_mod_prime(c, split, prime_index, f)});
        return r.evaluate(f, a % f.characteristic(), b % f.characteristic());
    };
    if (!f.is_zero(reduce(m.disc))) return ReductionType::good;
    return f.is_zero(reduce(m.c4)) ? ReductionType::additive : ReductionType::multiplicative;
}

ReducedCurve specialize_and_reduce(const FreyCurveModel& m, std::uint64_t a, std::uint64_t b,
                                   const PrimeSplitting& split, const std::string& label) {
    return ReducedFamily(m, split, split.index_of(label)).specialize(a, b);
}

unsigned TargetEigensystem::value_mod7(const PrimeSplitting& split, std::size_t prime_index) const {
    if (const auto* table = std::get_if<std::map<std::string, unsigned>>(&source)) {
        const auto it = table->find(split.labels.at(prime_index));
        if (it == table->end()) throw std::out_of_range("target '" + name + "' has no value at " + split.labels[prime_index]);
        return it->second % 7;
    }
    const auto& ct = std::get<CurveTarget>(source);
    const std::uint64_t q = split.q;
    const ReducedCurve c = ReducedFamily(ct.model, split, prime_index).specialize(to_residue(ct.a, q), to_residue(ct.b, q));
    if (c.type != ReductionType::good) {
        throw std::out_of_range("target '" + name + "' has bad reduction at " + split.labels[prime_index]);
    }
    return static_cast<unsigned>(to_residue(trace_of_frobenius(c), 7));
}

bool local_constraint(const ReducedCurve& pair_curve, unsigned target_mod7) {
    switch (pair_curve.type) {
    case ReductionType::good:
        return static_cast<unsigned>(to_residue(trace_of_frobenius(pair_curve), 7)) == target_mod7 % 7;
    case ReductionType::multiplicative: {
        const std::uint64_t n1 = (pair_curve.field->field().size() + 1) % 7;
        const unsigned t = target_mod7 % 7;
        return t == n1 || t == (7 - n1) % 7;
    }
    case ReductionType::additive: return true;
    }
    return true;
}

bool local_constraint(const FreyCurveModel& m, const TargetEigensystem& target, std::uint64_t a, std::uint64_t b,
                      const PrimeSplitting& split, const std::string& label) {
    const std::size_t i = split.index_of(label);
    const unsigned t = target.value_mod7(split, i);
    return local_constraint(ReducedFamily(m, split, i).specialize(a, b), t);
}

} // namespace frey
