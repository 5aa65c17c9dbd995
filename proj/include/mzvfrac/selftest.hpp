#ifndef MZVFRAC_SELFTEST_HPP
#define MZVFRAC_SELFTEST_HPP

#include <string>
#include <string_view>
#include <vector>

namespace mzvfrac::selftest {

struct SuiteResult {
    std::string name;
    std::string title;
    bool passed = false;
    std::string detail;
    double duration_ms = 0;
    // Wall-clock budget in milliseconds; 0 means none.
    double budget_ms = 0;
};

/// Names of the exit-gate suites, in run order.
std::vector<std::string> suite_names();

/// Runs one suite. Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(std::string_view name);

/// One-line JSON object {"name":..,"status":"pass"|"fail","duration_ms":..,"detail":..}.
std::string to_json_line(const SuiteResult& r);

}  // namespace mzvfrac::selftest

#endif  // MZVFRAC_SELFTEST_HPP
