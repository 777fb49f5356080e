#pragma once

// frey-sieve subcommands: units, sieve, levelraise, eigensys.
// Exit codes: 0 all checks passed, 1 a check failed, 2 bad input.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace frey::cli {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

/// FREY_SIEVE_DATA if set, else the directory baked in at build time.
std::filesystem::path data_directory();

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace frey::cli
