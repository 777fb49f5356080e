#include "doctest.h"

#include "frey/cli.hpp"
#include "frey/eigensystems.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
    bool has(const std::string& line) const { return ("\n" + out).find("\n" + line + "\n") != std::string::npos; }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = frey::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "frey_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

} // namespace

TEST_CASE("data directory") {
    setenv("FREY_SIEVE_DATA", FREY_TEST_DATA_DIR, 1);
    CHECK(frey::cli::data_directory() == std::filesystem::path(FREY_TEST_DATA_DIR));
    CHECK(std::filesystem::exists(frey::cli::data_directory() / "E_ab.model"));
    CHECK(std::filesystem::exists(frey::cli::data_directory() / "F_ab.model"));
}

TEST_CASE("units") {
    const auto r = run({"units"});
    CHECK(r.code == 0);
    CHECK(r.has("classes: 16807"));
    const auto v = run({"units", "--verify"});
    CHECK(v.code == 0);
    CHECK(v.has("epsilon0 identity: ok"));
    CHECK(v.has("independence: ok"));

    write(scratch("bad_gens.txt"), "[1,2,3\n");
    CHECK(run({"units", "--generators", scratch("bad_gens.txt").string()}).code == 2);
    write(scratch("short_gens.txt"), "[1,1,0,0,0,0,0,0,0,0,0,0]\n");
    CHECK(run({"units", "--generators", scratch("short_gens.txt").string()}).code == 2);
    CHECK(run({"units", "--generators", scratch("missing.txt").string()}).code == 2);

    const auto j = run({"units", "--format", "json-lines"});
    CHECK(j.code == 0);
    CHECK(j.out.find("\"classes\":16807") != std::string::npos);
}

TEST_CASE("sieve") {
    setenv("FREY_SIEVE_DATA", FREY_TEST_DATA_DIR, 1);
    for (const char* c : {"13div", "13ndiv"}) {
        const auto r = run({"sieve", "--case", c, "--parity", "odd", "--primes", "2,11,19,23"});
        CHECK(r.code == 0);
        CHECK(r.has("survivors: 0"));
    }
    const auto both = run({"sieve", "--parity", "odd", "--primes", "2,11,19,23", "--threads", "2"});
    CHECK(both.has("survivors: 0"));
    const auto one = run({"sieve", "--case", "13ndiv", "--parity", "four", "--primes", "2,11,19,23,83"});
    CHECK(one.code == 0);
    CHECK(one.has("survivors: 1 (epsilon0)"));
    CHECK(run({"sieve", "--case", "13ndiv", "--primes", ""}).has("survivors: 16807"));

    SUBCASE("reports are identical across thread counts") {
        const auto a = run({"sieve", "--parity", "odd", "--primes", "2,11,19", "--threads", "1"});
        const auto b = run({"sieve", "--parity", "odd", "--primes", "2,11,19", "--threads", "4"});
        CHECK(a.out == b.out);
    }

    SUBCASE("json lines") {
        const auto j = run({"sieve", "--case", "13ndiv", "--parity", "four", "--primes", "2,11,19,23,83", "--format",
                            "json-lines"});
        CHECK(j.out.find("\"record\":\"summary\"") != std::string::npos);
        CHECK(j.out.find("\"epsilon0_only\":true") != std::string::npos);
    }

    SUBCASE("input errors") {
        CHECK(run({"sieve", "--primes", "2", "--curve", scratch("nope.model").string()}).code == 2);
        CHECK(run({"sieve", "--primes", "2,4"}).code == 2);
        CHECK(run({"sieve", "--parity", "even"}).code == 2);
        CHECK(run({"sieve", "--case", "13"}).code == 2);
        CHECK(run({"sieve", "--format", "xml"}).code == 2);
        CHECK(run({"sieve", "--bogus"}).code == 2);
        write(scratch("broken.model"), "name = X\nfield = cubic\na7 += (0, 0) [1]\n");
        const auto b = run({"sieve", "--primes", "11", "--curve", scratch("broken.model").string()});
        CHECK(b.code == 2);
        CHECK(b.err.find("line 3") != std::string::npos);
        CHECK(run({"sieve", "--primes", "11", "--no-modular", "--curve", scratch("nope.model").string()}).code == 0);
    }
    CHECK(run({}).code == 2);
}

TEST_CASE("levelraise") {
    setenv("FREY_SIEVE_DATA", FREY_TEST_DATA_DIR, 1);
    const auto sub = run({"levelraise", "--q", "5,17,23,29,43,61", "--no-unit"});
    CHECK(sub.code == 0);
    CHECK(sub.has("forced: all"));
    const auto three = run({"levelraise", "--q", "3"});
    CHECK(three.code != 0);
    CHECK(three.has("no-information: 3"));
    const auto nineteen = run({"levelraise", "--q", "19", "--no-unit"});
    CHECK(nineteen.code == 1);
    CHECK(nineteen.has("not-forced: 19"));
    CHECK(run({"levelraise", "--q", "19,29", "--with-c1c2"}).has("forced: all"));
    CHECK(run({"levelraise", "--q", "5", "--unit", "1234"}).code == 2);
    CHECK(run({"levelraise", "--q", "5", "--check-multiplicative"}).has("case 13ndiv q=5 F_ab reduction: multiplicative"));
}

TEST_CASE("eigensys") {
    const auto fixture = scratch("fixture.txt");
    frey::save_table(frey::synthetic_fixture(), fixture);
    const auto r = run({"eigensys", "--table", fixture.string(), "--filter-primes", "5,83", "--classify"});
    CHECK(r.code == 0);
    CHECK(r.has("survivors: 4"));
    CHECK(r.has("classified: E1,E2,E1chi,E2chi"));
    CHECK(run({"eigensys", "--table", fixture.string()}).has("survivors: 4"));
    CHECK(run({"eigensys", "--table", fixture.string(), "--filter-primes", "5.1,5.2,5.3,83.1,83.2,83.3"}).has("survivors: 4"));

    const auto noise = scratch("noise.txt");
    frey::save_table(frey::synthetic_fixture(39, false), noise);
    CHECK(run({"eigensys", "--table", noise.string(), "--classify"}).has("survivors: 0"));

    const auto written = scratch("written.txt");
    CHECK(run({"eigensys", "--write-fixture", written.string()}).code == 0);
    CHECK(run({"eigensys", "--table", written.string()}).has("survivors: 4"));

    write(scratch("bad_table.txt"), "primes: 2.1,5.1\nrow: 1,9\n");
    const auto bad = run({"eigensys", "--table", scratch("bad_table.txt").string()});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("line 2") != std::string::npos);
    CHECK(run({"eigensys", "--table", fixture.string(), "--filter-primes", "17"}).code == 2);
    CHECK(run({"eigensys", "--table", fixture.string(), "--filter-primes", "2"}).code == 2);
    CHECK(run({"eigensys"}).code == 2);
}
