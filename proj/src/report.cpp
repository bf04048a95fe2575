#include "symrep/report.hpp"

#include <sstream>

#include <json.hpp>

namespace symrep {

std::string Report::to_text() const {
    std::ostringstream os;
    os << "verify n=" << n << " level=" << level << " seed=" << seed << "\n";
    for (const auto& c : checks) {
        os << (c.passed ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << "\n";
    }
    os << (all_passed() ? "all checks passed" : "CHECKS FAILED") << "\n";
    return os.str();
}

std::string Report::to_json_text() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["level"] = level;
    j["seed"] = seed;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["status"] = c.passed ? "pass" : "fail";
        jc["detail"] = c.detail;
        j["checks"].push_back(jc);
    }
    j["passed"] = all_passed();
    return j.dump(2) + "\n";
}

} // namespace symrep
