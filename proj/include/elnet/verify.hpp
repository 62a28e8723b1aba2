#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace elnet {

struct SuiteOptions {
    std::uint64_t seed = 1;
    int samples = 50;
    int size = 0;  // 0 picks the suite default
};

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::size_t checks = 0;
    std::string counterexample;
};

std::vector<std::string> suite_names();
// Throws ArgumentError for an unknown suite name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace elnet
