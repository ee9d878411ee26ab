#ifndef DYNQ_CHECKS_HPP
#define DYNQ_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace dynq {

struct CheckParams {
    uint64_t seed = 1;
    int trials = 50;
    int max_nodes = 8;
};

struct SuiteResult {
    std::string name;
    int trials = 0;
    int failures = 0;
    std::string detail;  // first failure description

    bool ok() const { return failures == 0; }
};

/// Names of the randomized oracle-equivalence suites.
const std::vector<std::string>& suite_names();

/// Runs one suite; unknown names throw ParseError.
SuiteResult run_suite(const std::string& name, const CheckParams& params);

}  // namespace dynq

#endif
