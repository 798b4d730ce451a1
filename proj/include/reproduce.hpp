#ifndef REPRODUCE_HPP
#define REPRODUCE_HPP

#include <string>
#include <vector>

// One-shot reproduction of a numbered claim: a scaled experiment with a
// pass/fail verdict and a human-readable observed-vs-expected summary.
struct ClaimResult {
    std::string id;
    bool pass = false;
    std::string detail;
};

// Stable claim ids, in criterion order.
const std::vector<std::string>& claim_ids();

// Runs one claim by id (a few aliases are accepted, e.g. closeness-bottom).
// Throws std::invalid_argument on an unknown id.
ClaimResult run_claim(const std::string& id);

#endif
