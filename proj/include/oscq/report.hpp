#pragma once

#include <optional>
#include <string>
#include <vector>

namespace oscq {

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;  // empty when there is nothing to add
};

// One verification run: machine-readable JSON is the primary form, the human
// text is rendered from the same data. FAIL iff some check failed.
struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<CheckItem> checks;
    std::vector<std::pair<std::string, std::string>> derived;
    double seconds = 0.0;

    bool all_pass() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void check(const std::string& name, bool pass, const std::string& detail = "") {
        checks.push_back({name, pass, detail});
    }
    void derive(const std::string& key, const std::string& value) {
        derived.emplace_back(key, value);
    }
    void input(const std::string& key, const std::string& value) {
        inputs.emplace_back(key, value);
    }

    void absorb(const Report& sub);  // merge with "command: " name prefixes

    // Schema documented in docs/report_schema.md; timing excluded when
    // comparing runs for determinism.
    std::string to_json(bool include_timing = true) const;
    std::string human() const;
};

// ---------------------------------------------------------------------------
// Verification drivers shared by the CLI and the test suites.

Report run_classify(const std::optional<std::string>& algebra_file);
Report run_verify_hopf(int order);
Report run_verify_rmatrix(int order);
Report run_verify_frt();
Report run_verify_sklyanin();
Report run_verify_boson(int order);
Report run_verify_all(int order);

}  // namespace oscq
