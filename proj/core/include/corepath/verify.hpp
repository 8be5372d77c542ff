#pragma once

#include <string>
#include <vector>

#include "corepath/bijection.hpp"

namespace corepath {

struct PropertyResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail; ///< first counterexample, or a summary of what was checked
};

struct VerifyOptions {
    int max_size = 10; ///< bound on m + r for the path-family sweeps
    int workers = 0;   ///< 0 = hardware concurrency
    /// Fault injection: the path-family suites drive this variant of the
    /// forward map, so a corrupted dispatch must surface as failures.
    PhiMutation mutation = PhiMutation::None;
};

/// Suites: bijection, runs, cornerless, tcore, self_conjugate, counts, all.
std::vector<std::string> verify_suite_names();
bool is_verify_suite(const std::string& name);
std::vector<PropertyResult> run_verify_suite(const std::string& name, const VerifyOptions& options);

bool all_passed(const std::vector<PropertyResult>& results);

} // namespace corepath
