#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace s2s2::cli {

enum ExitCode { kOk = 0, kMismatch = 1, kMalformed = 2 };

/// Runs one command. `args` excludes the program name. Reports go to `out`
/// (or the --out file), diagnostics to `err`. `input` feeds commands that read stdin.
int run(const std::vector<std::string>& args, std::istream& input, std::ostream& out, std::ostream& err);

/// Directory holding reference_values.json unless --reference overrides it.
std::string default_data_dir();

}  // namespace s2s2::cli
