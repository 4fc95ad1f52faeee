#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rsl {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the full reproduction suite (all golden values and property sweeps
/// the project is accepted against). Progress lines go to `progress` when
/// non-null; one result per criterion, in order.
std::vector<CriterionResult> run_acceptance_suite(std::ostream* progress = nullptr);

} // namespace rsl
