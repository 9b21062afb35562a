#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cohid/field.hpp"

namespace cohid::app {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::string detail;
};

struct VerifyOptions {
    std::string suite = "fast";
    std::uint64_t seed = 1;
    /// Perturbs one closed form so that its check must fail: "", "ground", "ku2" or "cup".
    std::string mutate;
    Field field = Field::rationals();
};

/// One randomized invariant; count is the number of trials.
struct Check {
    std::string name;
    std::size_t fast_count;
    std::size_t full_count;
    std::function<CheckResult(std::size_t count, std::uint64_t seed, const VerifyOptions&)> run;
};

const std::vector<Check>& checks();
/// Runs a named check with an explicit trial count.
CheckResult run_check(const std::string& name, std::size_t count, const VerifyOptions& opts);
std::vector<CheckResult> run_suite(const VerifyOptions& opts);

}  // namespace cohid::app
