#pragma once

#include <string>
#include <vector>

namespace netfix {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the full verification suite (deterministic, fixed seeds).
std::vector<CriterionResult> run_acceptance();

/// Prints one line per criterion to stdout; returns true iff all passed.
bool print_acceptance(const std::vector<CriterionResult>& results);

}  // namespace netfix
