#pragma once

#include <string>
#include <vector>

namespace qmu {

enum class CheckStatus {
    Pass,
    Fail,
    NegativeControl,  // expected-to-fail control that did fail
};

struct CheckResult {
    std::string id;
    std::string source;   // provenance label within the verified catalog
    CheckStatus status = CheckStatus::Pass;
    size_t residual_terms = 0;
    std::string residual;  // rendering, populated on failure
    long millis = 0;
};

struct SuiteReport {
    std::string suite;
    std::string t_label;
    std::vector<CheckResult> checks;

    bool overall() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) return false;
        return true;
    }
    size_t failures() const {
        size_t n = 0;
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) ++n;
        return n;
    }
};

std::string check_status_name(CheckStatus s);

// Text rendering: one line per check, stable ordering.
std::string render_text(const SuiteReport& rep);
std::string render_text(const std::vector<SuiteReport>& reps);

// JSON rendering per the documented schema; when deterministic, the millis
// fields are zeroed so identical inputs produce byte-identical reports.
std::string render_json(const std::vector<SuiteReport>& reps, bool deterministic);

}  // namespace qmu
