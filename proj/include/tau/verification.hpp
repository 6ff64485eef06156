#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace tau {

/// One identity check. `witness` is filled only on failure.
struct Check {
    std::string label;
    bool passed = true;
    std::string witness;
};

/// Outcome of a verification suite: one entry per identity instance checked, plus free-form
/// observations that are reported but not asserted.
struct VerificationReport {
    std::string suite;
    std::vector<Check> checks;
    std::vector<std::string> notes;

    explicit VerificationReport(std::string name = {}) : suite(std::move(name)) {}

    void record(std::string label, bool ok, std::string witness = {}) {
        checks.push_back({std::move(label), ok, ok ? std::string{} : std::move(witness)});
    }

    void merge(const VerificationReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
        notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    }

    [[nodiscard]] bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    }

    [[nodiscard]] std::size_t failures() const {
        return static_cast<std::size_t>(
            std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
    }

    /// Summary line followed by every failure (and notes when `verbose`).
    void print(std::ostream& os, bool verbose = false) const {
        os << suite << ": " << (passed() ? "pass" : "FAIL") << ", " << checks.size() << " checks, "
           << failures() << " failed\n";
        for (const Check& c : checks) {
            if (!c.passed) os << "  FAIL " << c.label << "\n    " << c.witness << "\n";
            else if (verbose) os << "  ok   " << c.label << "\n";
        }
        for (const std::string& n : notes) os << "  note: " << n << "\n";
    }
};

}  // namespace tau
