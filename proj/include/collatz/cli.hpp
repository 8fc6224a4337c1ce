#pragma once

#include <iosfwd>

namespace collatz::cli {

enum ExitCode : int { ok = 0, domain_error = 1, usage_error = 2, claim_mismatch = 3 };

// Entry point for the collatz-lab tool; writes to the given streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace collatz::cli
