#pragma once

#include <string>
#include <vector>

namespace mpla {

struct Witness {
    std::string where;
    std::string residual;
};

struct CheckResult {
    std::string name;
    std::string label;  // equation label cited in reports, may be empty
    std::size_t evaluated = 0;
    std::size_t failures = 0;
    std::vector<Witness> witnesses;

    bool passed() const { return failures == 0; }

    void record(const std::string& where, const std::string& residual) {
        ++failures;
        if (witnesses.size() < kMaxWitnesses) witnesses.push_back({where, residual});
    }

    static constexpr std::size_t kMaxWitnesses = 16;
};

struct ValidationReport {
    std::string subject;
    std::vector<CheckResult> checks;

    bool valid() const {
        for (const auto& c : checks)
            if (!c.passed()) return false;
        return true;
    }
    std::size_t passed_count() const {
        std::size_t n = 0;
        for (const auto& c : checks) n += c.passed();
        return n;
    }
    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name || c.label == name) return &c;
        return nullptr;
    }
    void append(const ValidationReport& other) {
        for (const auto& c : other.checks) checks.push_back(c);
    }

    std::string to_text() const {
        std::string s = subject + ": " + (valid() ? "VALID" : "INVALID") + " (" + std::to_string(passed_count()) +
                        "/" + std::to_string(checks.size()) + " axiom groups)\n";
        for (const auto& c : checks) {
            if (c.passed()) continue;
            std::string tag = c.label.empty() ? c.name : c.label + " [" + c.name + "]";
            for (const auto& w : c.witnesses) s += "  " + tag + " failed at " + w.where + ", residual " + w.residual + "\n";
            if (c.failures > c.witnesses.size())
                s += "  " + tag + ": " + std::to_string(c.failures - c.witnesses.size()) + " further failures\n";
        }
        return s;
    }
};

} // namespace mpla
