#ifndef KOSZULKIT_REPORT_HPP
#define KOSZULKIT_REPORT_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace koszulkit {

struct ConditionCheck {
    std::string name;
    bool passed = true;
    std::string witness;

    ConditionCheck(std::string n = {}, bool ok = true, std::string w = {})
        : name(std::move(n)), passed(ok), witness(std::move(w)) {}

    // Keeps the first witness only.
    void fail(const std::string& w) {
        if (passed) witness = w;
        passed = false;
    }
};

struct ConditionReport {
    std::vector<ConditionCheck> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const ConditionCheck& c) { return c.passed; });
    }
    const ConditionCheck* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

}  // namespace koszulkit

#endif
