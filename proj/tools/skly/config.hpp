// SPDX-License-Identifier: Apache-2.0
#ifndef SKLY_TOOLS_CONFIG_HPP
#define SKLY_TOOLS_CONFIG_HPP

#include <complex>
#include <cstdint>
#include <string>

namespace skly::tool {

// Run-wide settings.  Defaults may be overridden by a key=value file named
// through the SKLY_CONFIG environment variable, then by command-line flags;
// identical (config, command line, seed) reproduce identical output bytes.
struct RunConfig {
    std::complex<double> tau{0.0, 1.2};
    double tol = 0.0;          // 0 = per-layer defaults
    std::uint64_t seed = 12345;
    bool json = false;
    int samples = 100;
    int max_size = 6;          // exhaustive bound for the LR oracle suite

    double tol_or(double fallback) const { return tol > 0.0 ? tol : fallback; }
};

// Loads overrides from the SKLY_CONFIG file when the variable is set.
// Unknown keys are rejected (exit-2 material).
void apply_config_env(RunConfig& cfg);

} // namespace skly::tool

#endif
