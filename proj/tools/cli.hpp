#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace bipart::cli {

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;   // parse, schema, validation, domain or usage error
inline constexpr int kExitBudget = 2;    // equalizer search budget exceeded
inline constexpr int kExitInternal = 3;  // internal invariant violated

/// Environment variable overriding the default search budget.
inline constexpr const char* kBudgetEnv = "BIPART_SEARCH_BUDGET";

/// Runs one command. `args` excludes the program name. Documents named "-"
/// (the default) are read from `in`. Results go to `out`; diagnostics go to
/// `err` as single-line JSON objects.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bipart::cli
