#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace collatz {

struct ClaimOutcome {
    bool pass = false;
    std::string observed;
    std::string expected;
};

struct Claim {
    std::string id;
    std::string description;
    std::function<ClaimOutcome()> check;
};

struct ClaimOptions {
    unsigned workers = 1;
    bool extended = false;  // adds the multi-hour 5e9 ratio census
};

std::vector<Claim> published_claims(const ClaimOptions& options);

// Runs every claim, printing one PASS/FAIL line each. Returns true if all pass.
bool run_claims(const std::vector<Claim>& claims, std::ostream& out);

}  // namespace collatz
