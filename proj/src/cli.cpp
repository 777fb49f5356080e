#include "frey/cli.hpp"

#include "frey/eigensystems.hpp"
#include "frey/freycurves.hpp"
#include "frey/modarith.hpp"
#include "frey/sieve.hpp"
#include "frey/units.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#ifndef FREY_DEFAULT_DATA_DIR
#define FREY_DEFAULT_DATA_DIR "data"
#endif

namespace frey::cli {

namespace {

using nlohmann::json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { text, json_lines };

// Text reports are "key: value" lines; json-lines reports emit one object per record.
class Reporter {
public:
    Reporter(std::ostream& out, Format fmt) : out_(out), fmt_(fmt) {}

    void line(const std::string& key, const std::string& value) {
        if (fmt_ == Format::text) out_ << key << ": " << value << "\n";
    }
    void record(const json& j) {
        if (fmt_ == Format::json_lines) out_ << j.dump() << "\n";
    }
    bool text() const { return fmt_ == Format::text; }

private:
    std::ostream& out_;
    Format fmt_;
};

std::string join(const std::vector<std::string>& xs, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
    return s;
}

template <class T>
std::vector<std::string> to_strings(const std::vector<T>& xs) {
    std::vector<std::string> out;
    for (const auto& x : xs) out.push_back(std::to_string(x));
    return out;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::vector<std::uint64_t> parse_primes(const std::string& s) {
    std::vector<std::uint64_t> out;
    for (const auto& item : split_list(s)) {
        if (!std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }) || item.size() > 9) {
            throw InputError("not a prime: '" + item + "'");
        }
        const std::uint64_t q = std::stoull(item);
        if (!is_prime(q)) throw InputError("not a prime: " + item);
        out.push_back(q);
    }
    return out;
}

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "json-lines") return Format::json_lines;
    throw InputError("unknown format '" + s + "' (text or json-lines)");
}

Parity parse_parity(const std::string& s) {
    if (s == "odd") return Parity::odd_sum;
    if (s == "four") return Parity::four_divides;
    if (s == "none") return Parity::none;
    throw InputError("unknown parity '" + s + "' (odd, four or none)");
}

std::vector<bool> parse_cases(const std::string& s) {
    if (s == "13div") return {true};
    if (s == "13ndiv") return {false};
    if (s == "both") return {true, false};
    throw InputError("unknown case '" + s + "' (13div, 13ndiv or both)");
}

std::string case_name(bool thirteen_divides) { return thirteen_divides ? "13div" : "13ndiv"; }

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

std::filesystem::path resolve_data_file(const std::string& explicit_path, const char* default_name) {
    return explicit_path.empty() ? data_directory() / default_name : std::filesystem::path(explicit_path);
}

FreyCurveModel load_model_or_throw(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) throw InputError("curve model not found: " + path.string());
    try {
        return load_curve_model(path);
    } catch (const CurveFormatError& e) {
        throw InputError(path.string() + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

UnitBasis load_generators(const std::string& path) {
    if (path.empty()) return UnitBasis{};
    std::ifstream in(path);
    if (!in) throw InputError("cannot open generator file " + path);
    std::vector<CyclotomicInt> gens;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            gens.push_back(CyclotomicInt::parse(line));
        } catch (const std::invalid_argument& e) {
            throw InputError(path + ": line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    try {
        return UnitBasis(std::move(gens));
    } catch (const std::invalid_argument& e) {
        throw InputError(path + ": " + e.what());
    }
}

struct CommonOptions {
    std::string format = "text";
    unsigned threads = 0;
};

void add_common(CLI::App* app, CommonOptions& o) {
    app->add_option("--format", o.format, "text or json-lines");
    app->add_option("--threads", o.threads, "worker threads (default: hardware concurrency)");
}

// units

struct UnitsOptions {
    CommonOptions common;
    bool verify = false;
    std::string generators;
};

int cmd_units(const UnitsOptions& o, std::ostream& out, std::ostream& err) {
    Reporter rep(out, parse_format(o.common.format));
    const UnitBasis basis = load_generators(o.generators);
    const auto classes = unit_class_enumerate();

    json j{{"command", "units"}, {"classes", classes.size()}};
    rep.line("classes", std::to_string(classes.size()));
    rep.line("generators", o.generators.empty() ? "cyclotomic u2..u6" : o.generators);

    std::optional<UnitLogMap> logs;
    try {
        logs.emplace(basis);
    } catch (const std::runtime_error& e) {
        err << "independence check failed: " << e.what() << "\n";
        rep.line("independence", "failed");
        j["independence"] = false;
        rep.record(j);
        return kExitCheckFailed;
    }
    std::vector<std::string> labels;
    for (const auto& p : logs->primes()) labels.push_back(p.label());
    rep.line("character primes", join(labels));
    rep.line("independence", "ok");
    j["character_primes"] = labels;
    j["independence"] = true;

    bool ok = classes.size() == kUnitClassCount;
    const CyclotomicInt eps = epsilon0_value();
    const UnitClass cls = logs->class_of(eps);
    rep.line("epsilon0 class", cls.to_string());
    j["epsilon0_class"] = cls.to_string();

    if (o.verify) {
        std::set<std::uint32_t> seen;
        for (const auto& u : classes) seen.insert(u.index());
        const bool distinct = seen.size() == kUnitClassCount;
        const bool identity = epsilon0_identity_holds(eps);
        const mpz_class n = eps.norm();
        const bool unit = n == 1 || n == -1;
        const bool round_trip = logs->class_of(basis.value(cls)) == cls;
        rep.line("enumeration", distinct ? "ok" : "failed");
        rep.line("epsilon0 identity", identity ? "ok" : "failed");
        rep.line("epsilon0 norm", n.get_str());
        rep.line("class round trip", round_trip ? "ok" : "failed");
        j["enumeration"] = distinct;
        j["epsilon0_identity"] = identity;
        j["epsilon0_norm"] = n.get_si();
        j["class_round_trip"] = round_trip;
        ok = ok && distinct && identity && unit && round_trip;
    }
    rep.record(j);
    return ok ? kExitOk : kExitCheckFailed;
}

// sieve

struct SieveOptions {
    CommonOptions common;
    std::string cases = "both";
    std::string parity = "none";
    std::string primes;
    std::string curve;
    std::string generators;
    bool no_modular = false;
};

int cmd_sieve(const SieveOptions& o, std::ostream& out) {
    Reporter rep(out, parse_format(o.common.format));
    const auto cases = parse_cases(o.cases);
    const Parity parity = parse_parity(o.parity);
    const auto primes = parse_primes(o.primes);
    UnitBasis basis = load_generators(o.generators);

    std::optional<FreyCurveModel> model;
    if (!o.no_modular) model = load_model_or_throw(resolve_data_file(o.curve, "E_ab.model"));

    SieveContext::Options copt;
    copt.threads = resolve_threads(o.common.threads);
    SieveContext ctx(basis, model, std::nullopt, copt);
    const UnitLogMap logs(ctx.basis());
    const UnitClass eps0 = logs.class_of(epsilon0_value());

    Constraints k;
    k.modular = !o.no_modular;

    rep.line("parity", std::string(parity_name(parity)));
    rep.line("primes", join(to_strings(primes)));
    rep.line("modular", model ? model->name + " against " + model->name + "(1,-1)" : "off");

    std::set<UnitClass> all;
    for (bool t : cases) {
        const UnitSieveReport r = surviving_units(ctx, {t, parity}, primes, k);
        for (const auto& step : r.steps) {
            std::ostringstream s;
            s << "pairs " << step.pairs << ", admissible " << step.admissible << ", eliminated " << step.eliminated
              << ", survivors " << step.survivors << ", constraints "
              << (step.seventh_power ? (step.modular ? "unit,modular" : "unit") : (step.modular ? "modular" : "none"));
            if (step.additive_flags) s << ", additive " << step.additive_flags;
            rep.line("case " + case_name(t) + " q=" + std::to_string(step.q), s.str());
            rep.record({{"record", "step"},
                        {"case", case_name(t)},
                        {"q", step.q},
                        {"unit_constraint", step.seventh_power},
                        {"modular_constraint", step.modular},
                        {"pairs", step.pairs},
                        {"admissible", step.admissible},
                        {"eliminated", step.eliminated},
                        {"survivors", step.survivors},
                        {"additive_flags", step.additive_flags}});
        }
        std::vector<std::string> ids;
        for (const auto& u : r.survivors) ids.push_back(u.to_string());
        rep.line("case " + case_name(t) + " survivors", std::to_string(r.survivors.size()));
        if (!ids.empty() && ids.size() <= 20) rep.line("case " + case_name(t) + " classes", join(ids));
        rep.record({{"record", "case"}, {"case", case_name(t)}, {"survivors", r.survivors.size()}, {"classes", ids}});
        all.insert(r.survivors.begin(), r.survivors.end());
    }
    const bool only_eps0 = all.size() == 1 && *all.begin() == eps0;
    rep.line("survivors", std::to_string(all.size()) + (only_eps0 ? " (epsilon0)" : ""));
    rep.record({{"record", "summary"}, {"survivors", all.size()}, {"epsilon0_only", only_eps0}});
    return kExitOk;
}

// levelraise

struct LevelRaiseOptions {
    CommonOptions common;
    std::string qs;
    std::string unit = "epsilon0";
    std::string cases = "13ndiv";
    std::string curve;
    std::string curve_k;
    std::string generators;
    bool no_unit = false;
    bool no_modular = false;
    bool with_c1c2 = false;
    bool check_multiplicative = false;
};

// F_{a,b} at a = 1, b = -1 + q k represents every pair with q | a + b up to scaling.
bool multiplicative_above(const FreyCurveModel& f, std::uint64_t q) {
    const PrimeSplitting split = split_prime(q, f.field);
    for (std::size_t i = 0; i < split.g; ++i) {
        if (reduction_type_at(f, 1, q - 1, split, i) != ReductionType::multiplicative) return false;
    }
    return true;
}

int cmd_levelraise(const LevelRaiseOptions& o, std::ostream& out) {
    Reporter rep(out, parse_format(o.common.format));
    const auto qs = o.qs.empty() ? level_raising_primes() : parse_primes(o.qs);
    const auto cases = parse_cases(o.cases);
    UnitBasis basis = load_generators(o.generators);

    std::optional<FreyCurveModel> model;
    if (!o.no_modular) model = load_model_or_throw(resolve_data_file(o.curve, "E_ab.model"));
    std::optional<FreyCurveModel> model_k;
    if (o.check_multiplicative) model_k = load_model_or_throw(resolve_data_file(o.curve_k, "F_ab.model"));

    SieveContext::Options copt;
    copt.threads = resolve_threads(o.common.threads);
    SieveContext ctx(basis, model, std::nullopt, copt);
    const UnitLogMap logs(ctx.basis());

    UnitClass u;
    if (o.unit == "epsilon0") {
        u = logs.class_of(epsilon0_value());
    } else if (o.unit == "trivial") {
        u = UnitClass{};
    } else {
        try {
            u = UnitClass::parse(o.unit);
        } catch (const std::invalid_argument& e) {
            throw InputError(std::string("--unit: ") + e.what());
        }
    }

    Constraints k;
    k.seventh_power = !o.no_unit;
    k.modular = !o.no_modular;
    k.c1c2 = o.with_c1c2;

    rep.line("unit", (o.unit == "epsilon0" || o.unit == "trivial" ? o.unit + " " : std::string()) + u.to_string());
    bool ok = true;
    std::vector<std::string> forced, not_forced, no_info;
    for (bool t : cases) {
        const LevelRaisingReport r = level_raising_scan(ctx, qs, u, {t, Parity::none}, k);
        for (const auto& s : r.steps) {
            const std::string key = "case " + case_name(t) + " q=" + std::to_string(s.q);
            json j{{"record", "step"}, {"case", case_name(t)}, {"q", s.q}, {"no_information", s.no_information},
                   {"constraints", s.applied}, {"survivors", s.survivors}, {"forced", s.forced},
                   {"all_forced", s.all_forced()}};
            if (s.no_information) {
                rep.line(key, "no information");
                no_info.push_back(std::to_string(s.q));
            } else {
                std::ostringstream line;
                line << "survivors " << s.survivors << ", with q | a+b " << s.forced << ", constraints "
                     << join(s.applied) << (s.all_forced() ? ", forced" : ", not forced");
                rep.line(key, line.str());
                (s.all_forced() ? forced : not_forced).push_back(std::to_string(s.q));
            }
            if (model_k && !s.no_information && s.q != 2 && s.q != 3 && s.q != kConductor) {
                const bool mult = multiplicative_above(*model_k, s.q);
                rep.line(key + " " + model_k->name + " reduction", mult ? "multiplicative" : "not multiplicative");
                j["multiplicative"] = mult;
                ok = ok && mult;
            }
            rep.record(j);
        }
    }
    ok = ok && not_forced.empty() && no_info.empty();
    if (not_forced.empty() && no_info.empty()) {
        rep.line("forced", "all");
    } else {
        if (!forced.empty()) rep.line("forced", join(forced));
        if (!not_forced.empty()) rep.line("not-forced", join(not_forced));
    }
    if (!no_info.empty()) rep.line("no-information", join(no_info));
    rep.record({{"record", "summary"}, {"forced_all", ok}, {"forced", forced}, {"not_forced", not_forced},
                {"no_information", no_info}});
    return ok ? kExitOk : kExitCheckFailed;
}

// eigensys

struct EigensysOptions {
    CommonOptions common;
    std::string table;
    std::string filter_primes;
    bool classify = false;
    std::string write_fixture;
    std::size_t noise_rows = 39;
    std::uint64_t eisenstein_bound = 0;
};

std::vector<PrimeLabelK> parse_filter_primes(const std::string& s) {
    if (s.empty()) return default_filter_primes();
    std::vector<PrimeLabelK> out;
    for (const auto& item : split_list(s)) {
        try {
            if (item.find('.') != std::string::npos) {
                out.push_back(PrimeLabelK::parse(item));
            } else {
                for (auto& p : primes_of_k_above(parse_primes(item).front())) out.push_back(std::move(p));
            }
        } catch (const std::invalid_argument& e) {
            throw InputError(std::string("--filter-primes: ") + e.what());
        }
    }
    return out;
}

int cmd_eigensys(const EigensysOptions& o, std::ostream& out) {
    Reporter rep(out, parse_format(o.common.format));
    if (!o.write_fixture.empty()) {
        save_table(synthetic_fixture(o.noise_rows), o.write_fixture);
        rep.line("fixture", o.write_fixture);
        rep.record({{"record", "fixture"}, {"path", o.write_fixture}});
        if (o.table.empty()) return kExitOk;
    }
    if (o.table.empty()) throw InputError("--table is required");
    EigensystemTable t;
    try {
        t = load_table(o.table);
    } catch (const TableFormatError& e) {
        throw InputError(o.table + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(o.table + ": " + e.what());
    } catch (const std::runtime_error& e) {
        throw InputError(e.what());
    }
    const auto primes = parse_filter_primes(o.filter_primes);
    std::vector<std::string> labels;
    for (const auto& p : primes) labels.push_back(p.label);

    std::vector<std::string> survivors;
    try {
        survivors = level_raising_filter(t, primes);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    rep.line("rows", std::to_string(t.rows().size()));
    rep.line("filter primes", join(labels));
    rep.line("survivors", std::to_string(survivors.size()));
    if (!survivors.empty()) rep.line("surviving rows", join(survivors));
    json j{{"record", "summary"}, {"rows", t.rows().size()}, {"filter_primes", labels},
           {"survivors", survivors.size()}, {"surviving_rows", survivors}};

    if (o.classify) {
        std::vector<std::string> names;
        json cls = json::object();
        for (const auto& c : classify_survivors(t, survivors)) {
            names.emplace_back(eigen_class_name(c.cls));
            cls[c.id] = std::string(eigen_class_name(c.cls));
        }
        rep.line("classified", names.empty() ? "none" : join(names));
        j["classified"] = cls;
    }
    if (o.eisenstein_bound) {
        const auto eis = eisenstein_scan(t, o.eisenstein_bound);
        rep.line("eisenstein", eis.empty() ? "none" : join(eis));
        j["eisenstein"] = eis;
    }
    rep.record(j);
    return kExitOk;
}

} // namespace

std::filesystem::path data_directory() {
    if (const char* env = std::getenv("FREY_SIEVE_DATA"); env && *env) return env;
    return FREY_DEFAULT_DATA_DIR;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Unit sieve, level-raising scan and eigensystem filter for x^13 + y^13 = 3 z^7", "frey-sieve"};
    app.require_subcommand(1);

    UnitsOptions uo;
    auto* units = app.add_subcommand("units", "enumerate unit classes modulo 7th powers");
    add_common(units, uo.common);
    units->add_flag("--verify", uo.verify, "check independence, enumeration and the epsilon0 identity");
    units->add_option("--generators", uo.generators, "file with five unit generators, one coordinate list per line");

    SieveOptions so;
    auto* sieve = app.add_subcommand("sieve", "modular unit sieve");
    add_common(sieve, so.common);
    sieve->add_option("--case", so.cases, "13div, 13ndiv or both");
    sieve->add_option("--parity", so.parity, "odd, four or none");
    sieve->add_option("--primes", so.primes, "comma-separated sieve primes");
    sieve->add_option("--curve", so.curve, "curve model (default $FREY_SIEVE_DATA/E_ab.model)");
    sieve->add_option("--generators", so.generators, "unit generator override");
    sieve->add_flag("--no-modular", so.no_modular, "7th-power condition only");

    LevelRaiseOptions lo;
    auto* lr = app.add_subcommand("levelraise", "level-raising pair scan");
    add_common(lr, lo.common);
    lr->add_option("--q", lo.qs, "comma-separated primes (default 5,17,19,23,29,37,41,43,61,83,89)");
    lr->add_option("--unit", lo.unit, "epsilon0, trivial or base-7 digits e2e3e4e5e6");
    lr->add_option("--case", lo.cases, "13div, 13ndiv or both");
    lr->add_option("--curve", lo.curve, "curve model (default $FREY_SIEVE_DATA/E_ab.model)");
    lr->add_option("--curve-k", lo.curve_k, "cubic-field model (default $FREY_SIEVE_DATA/F_ab.model)");
    lr->add_option("--generators", lo.generators, "unit generator override");
    lr->add_flag("--no-unit", lo.no_unit, "drop the 7th-power condition");
    lr->add_flag("--no-modular", lo.no_modular, "drop the curve congruence");
    lr->add_flag("--with-c1c2", lo.with_c1c2, "add the c1/c2 condition at q = 1 mod 7");
    lr->add_flag("--check-multiplicative", lo.check_multiplicative,
                 "check that the cubic-field curve is multiplicative above q when q | a+b");

    EigensysOptions eo;
    auto* eig = app.add_subcommand("eigensys", "mod-7 eigensystem filter and classification");
    add_common(eig, eo.common);
    eig->add_option("--table", eo.table, "eigensystem table");
    eig->add_option("--filter-primes", eo.filter_primes, "rational primes or labels (default 5,83)");
    eig->add_flag("--classify", eo.classify, "label survivors E1, E2, E1chi, E2chi");
    eig->add_option("--eisenstein", eo.eisenstein_bound, "also list rows congruent to 1 + N below this norm");
    eig->add_option("--write-fixture", eo.write_fixture, "write the synthetic fixture table to this path");
    eig->add_option("--noise-rows", eo.noise_rows, "noise rows in the written fixture");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "frey-sieve: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (units->parsed()) return cmd_units(uo, out, err);
        if (sieve->parsed()) return cmd_sieve(so, out);
        if (lr->parsed()) return cmd_levelraise(lo, out);
        if (eig->parsed()) return cmd_eigensys(eo, out);
    } catch (const InputError& e) {
        err << "frey-sieve: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "frey-sieve: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitInputError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

} // namespace frey::cli
