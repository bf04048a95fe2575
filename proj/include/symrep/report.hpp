#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace symrep {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail; // human-oriented summary or counterexample
};

// Outcome of a verification run. Serialization is deterministic (fixed
// key order, fixed check order) and never mentions the thread count, so
// runs differing only in --jobs produce identical bytes.
struct Report {
    int n = 0;
    std::string level; // "full" or "sample"
    uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    std::string to_text() const;
    std::string to_json_text() const;
};

} // namespace symrep
