#pragma once

#include "qmu/parser.hpp"
#include "qmu/report.hpp"

namespace qmu {

struct SuiteOptions {
    ParamConfig cfg;
    int max_two_l = 3;
    bool extended = false;            // include the 2l = 3 spectral block
    std::vector<std::string> only;    // restrict catalog suites to these ids
    uint64_t seed = 20110521;         // property-suite seed
    size_t property_cases = 1100;
};

// Registered suite names in canonical execution order.
std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);

// Runs one suite against a fresh workspace for the given options.
SuiteReport run_suite(const std::string& name, const Workspace& ws, const SuiteOptions& opts);

// Runs every suite in canonical order against one shared workspace.
std::vector<SuiteReport> run_all_suites(const Workspace& ws, const SuiteOptions& opts);

// Free-algebra dimension oracle: dimension of the degree <= d slice of the
// quotient computed from the relation ideal at the rational point q0, versus
// the count of admissible normal monomials.  Exact linear algebra over Q.
struct PbwOracleResult {
    size_t expected = 0;
    size_t computed = 0;
    bool match() const { return expected == computed; }
};
PbwOracleResult pbw_dimension_oracle(const Presentation& p, int degree, const Rat& q0);

}  // namespace qmu
