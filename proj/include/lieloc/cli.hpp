#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lieloc::cli {

/// Exit statuses: 0 success (or verdict "equal"/"local"), 2 verification
/// failed, 1 usage, I/O or parse error.
inline constexpr int kOk = 0;
inline constexpr int kError = 1;
inline constexpr int kVerificationFailed = 2;

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lieloc::cli
