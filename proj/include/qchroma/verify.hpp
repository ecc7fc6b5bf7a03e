#pragma once

#include <string>
#include <vector>

namespace qchroma {

struct CheckResult {
    std::string name;
    std::string range;
    bool pass = false;
    bool informational = false; // reported but never fails the suite
    std::string detail;
};

/* Identity batteries per module: rho, csf, g, positivity, graphs, toric, or
 * all. max_n = 0 picks each suite's default range. */
std::vector<CheckResult> verify_suite(const std::string& suite, int max_n);

bool all_passed(const std::vector<CheckResult>& results);

/* Reference Delta table for m=(3,5,5,5,6,6), k=3: twelve rows with their
 * images and the failed-shift annotations. */
extern const char* kDeltaTableFixture;

} // namespace qchroma
