#pragma once

// Randomized suite runners over the checks in verify.hpp.

#include "dispkit/verify.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace dispkit {

struct SuiteOptions {
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    std::size_t min_size = 4;
    std::size_t max_size = 8;
};

struct SuiteReport {
    std::string suite;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::size_t min_size = 0;
    std::size_t max_size = 0;
    std::vector<BoundCheck> checks;
    std::vector<std::string> failures;             // "check-name:digest"
    std::map<std::string, long long> observed_max; // largest lhs per check name
    std::map<std::string, double> observed;        // floating-point maxima (residuals)

    bool passed() const { return failures.empty(); }
};

class UnknownSuiteError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::vector<std::string> suite_names();

/// Trials run concurrently; the report depends only on (name, options).
SuiteReport run_suite(std::string_view name, const SuiteOptions& options);

/// Same report computed on one thread, kept as the reference for run_suite.
SuiteReport run_suite_serial(std::string_view name, const SuiteOptions& options);

/// Seed of trial `index` derived from the suite seed (SplitMix64 mixing).
std::uint64_t trial_seed(std::uint64_t seed, std::size_t index);

nlohmann::json to_json(const SuiteReport& r);

} // namespace dispkit
