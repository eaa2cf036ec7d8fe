// SPDX-License-Identifier: Apache-2.0
//
// The verification suites behind `skly verify <suite>`.  Each check carries
// the measured residual against its tolerance; exact symbolic checks use
// tolerance 0 and residual 0/1.
#ifndef SKLY_TOOLS_VERIFY_HPP
#define SKLY_TOOLS_VERIFY_HPP

#include <string>
#include <vector>

#include "config.hpp"

namespace skly::tool {

struct CheckResult {
    std::string name;
    bool passed = false;
    double residual = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const RunConfig& cfg);

} // namespace skly::tool

#endif
