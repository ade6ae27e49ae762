#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Full property suite: every quantitative claim the library stands behind,
// run at desk scale against the integer oracle. Shared by the acceptance
// test binary and the CLI `selftest` subcommand.

namespace fejer {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;   // worst case observed, fitted slopes, timings
    double seconds = 0.0;
};

struct SelftestOptions {
    std::uint64_t seed = 1;   // RNG seed for the sampled checks
    bool skip_timing = false; // drop the runtime-scaling check (CI noise)
};

std::vector<CheckResult> run_selftest(const SelftestOptions& options = {});

}  // namespace fejer
