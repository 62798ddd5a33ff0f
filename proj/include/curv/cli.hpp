#pragma once

#include <iosfwd>

namespace curv {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitConfig = 2;

// Entry point of the command-line tool: gen, curvature, match, certify, scan,
// spectrum, sharpness, corollary, verify-conjecture. Results go to `out`
// (or the --out file), diagnostics and failure records to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace curv
