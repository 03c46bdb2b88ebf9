#pragma once

#include <string>
#include <vector>

namespace bk {

// one verified claim: both sides rendered as text plus the verdict
struct Check {
    std::string claim;
    std::string lhs;
    std::string rhs;
    bool pass = false;
};

struct Report {
    std::string name;
    std::vector<Check> checks;

    void add(std::string claim, std::string lhs, std::string rhs, bool pass) {
        checks.push_back({std::move(claim), std::move(lhs), std::move(rhs), pass});
    }
    // lhs/rhs shown as "equal"/"differ"
    void add_equal(std::string claim, bool pass) {
        add(std::move(claim), pass ? "equal" : "differ", "equal", pass);
    }
    void append(const Report& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& c : checks) n += c.pass ? 0 : 1;
        return n;
    }
};

} // namespace bk
