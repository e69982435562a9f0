#pragma once

#include <string>
#include <vector>

namespace scimet::verify {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = true;
    std::size_t checks = 0;
    std::vector<std::string> failures;
    double seconds = 0.0;
};

inline constexpr int kCriterionCount = 13;

// Reproduction and property checks against the embedded fixtures, one per criterion.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all();

std::string format_line(const CriterionResult &r);

}  // namespace scimet::verify
