#pragma once

#include <string>
#include <vector>

#include "jointkit/io.hpp"

namespace jointkit {

struct SuiteResult {
    std::string name;
    bool passed = true;
    u64 cases = 0;
    u64 failures = 0;
    std::vector<std::string> notes;
    Json report;

    void fail(const std::string& why) {
        passed = false;
        ++failures;
        notes.push_back(why);
    }
    std::string summary() const;
};

struct SuiteConfig {
    u64 p = 7;
    u64 p2 = 11; // second prime for mixed-field suites
    std::size_t d = 3;
    u64 cases = 500;
    u64 seed = 1;
};

// Acceptance criteria, in order. `outdir` receives report artifacts where a
// criterion emits them.
SuiteResult grid_instance_check();
SuiteResult joints_trace_suite(u64 seed);
SuiteResult invariance_suite(const SuiteConfig& cfg);
SuiteResult bezout_suite(const SuiteConfig& cfg);
SuiteResult classical_suite(const SuiteConfig& cfg);
SuiteResult lower_bound_suite(const SuiteConfig& cfg);
SuiteResult sandwich_suite(const SuiteConfig& cfg);
SuiteResult flag_suite(const SuiteConfig& cfg);
SuiteResult multijoints_trace_suite(u64 seed, u64 systems);
SuiteResult carbery_suite(u64 seed, const std::string& outdir);
SuiteResult reduction_suite(const SuiteConfig& cfg);
SuiteResult concordance_suite(const SuiteConfig& cfg);

/// Criterion n in 1..12 with its pinned parameters.
SuiteResult run_criterion(int n, const std::string& outdir);
constexpr int kCriterionCount = 12;

/// Named suites for the command line: multiplicity, bezout, minima, flags,
/// sandwich, reduction.
SuiteResult run_named_suite(const std::string& name, const SuiteConfig& cfg);
std::vector<std::string> named_suites();

} // namespace jointkit
