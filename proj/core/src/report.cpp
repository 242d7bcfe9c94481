#include "qmu/report.hpp"

#include <json.hpp>

#include <sstream>

namespace qmu {

std::string check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass:
            return "pass";
        case CheckStatus::Fail:
            return "FAIL";
        case CheckStatus::NegativeControl:
            return "negative-control";
    }
    return "?";
}

std::string render_text(const SuiteReport& rep) {
    std::ostringstream out;
    out << "suite " << rep.suite;
    if (!rep.t_label.empty()) out << " (t = " << rep.t_label << ")";
    out << "\n";
    for (const auto& c : rep.checks) {
        out << "  [" << check_status_name(c.status) << "] " << c.id;
        if (!c.source.empty()) out << "  {" << c.source << "}";
        if (c.status == CheckStatus::Fail) {
            out << "  residual_terms=" << c.residual_terms;
            if (!c.residual.empty()) out << "  residual: " << c.residual;
        }
        out << "\n";
    }
    out << "  => " << (rep.overall() ? "PASS" : "FAIL") << " (" << rep.checks.size()
        << " checks, " << rep.failures() << " failures)\n";
    return out.str();
}

std::string render_text(const std::vector<SuiteReport>& reps) {
    std::ostringstream out;
    for (const auto& r : reps) out << render_text(r);
    return out.str();
}

std::string render_json(const std::vector<SuiteReport>& reps, bool deterministic) {
    nlohmann::ordered_json top = nlohmann::ordered_json::array();
    for (const auto& rep : reps) {
        nlohmann::ordered_json jr;
        jr["suite"] = rep.suite;
        jr["t"] = rep.t_label;
        jr["overall"] = rep.overall() ? "pass" : "fail";
        jr["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : rep.checks) {
            nlohmann::ordered_json jc;
            jc["id"] = c.id;
            jc["source"] = c.source;
            jc["status"] = check_status_name(c.status) == "FAIL"
                               ? "fail"
                               : check_status_name(c.status);
            jc["residual_terms"] = c.residual_terms;
            if (!c.residual.empty()) jc["residual"] = c.residual;
            jc["millis"] = deterministic ? 0 : c.millis;
            jr["checks"].push_back(std::move(jc));
        }
        top.push_back(std::move(jr));
    }
    return top.dump(2) + "\n";
}

}  // namespace qmu
