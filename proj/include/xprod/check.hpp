#pragma once

#include <deque>
#include <string>
#include <utility>
#include <vector>

namespace xprod {

/// One named verification with its witnesses. Witness strings are
/// human-readable and deterministic (canonical word/scalar printing).
struct CheckResult {
    std::string name;
    bool pass = true;
    std::vector<std::string> witnesses;

    void fail(std::string witness) {
        pass = false;
        witnesses.push_back(std::move(witness));
    }
};

/// A bundle of checks; pass iff every check passed. A deque keeps
/// references from add() valid while later checks are appended.
struct VerifyReport {
    std::deque<CheckResult> checks;

    CheckResult& add(std::string name) {
        checks.push_back(CheckResult{std::move(name)});
        return checks.back();
    }

    void merge(const VerifyReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

}  // namespace xprod
