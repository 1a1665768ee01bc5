#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace howe {

struct PropertyResult {
    std::string suite;
    std::string name;
    long cases = 0;
    long failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0; }
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    int max_rank = 5;
};

/// partitions, symbols, special, relations, cores, maps, uniform.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Deterministic given the seed.
/// Throws ParseError for an unknown suite name.
std::vector<PropertyResult> run_suite(std::string_view suite, const SuiteOptions& opts);

}  // namespace howe
