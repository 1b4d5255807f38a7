#pragma once

#include "ehrhart/families.hpp"

namespace ehrhart {

struct VerifyOptions
{
    int max_dim = 3;
    int trials = 10;
    std::uint64_t seed = 1;
    unsigned workers = 1;
};

struct CheckResult
{
    std::string params;
    bool ok = false;
    std::string detail;
};

/// Closed form against the counting oracle for one family. Checks may run
/// concurrently; results come back in a fixed order.
std::vector<CheckResult> run_verify(const std::string& family, const VerifyOptions& options);
std::vector<std::string> verify_families();

}  // namespace ehrhart
