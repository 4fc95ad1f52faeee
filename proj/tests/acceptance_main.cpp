// Acceptance suite driver: runs every reproduction criterion at its pinned
// tolerance and prints one pass/fail line per criterion.

#include <cstdio>
#include <iostream>

#include "rsl/acceptance.hpp"

int main() {
    auto results = rsl::run_acceptance_suite(&std::cout);
    bool all = true;
    double total = 0.0;
    for (auto& r : results) {
        all = all && r.pass;
        total += r.seconds;
    }
    std::printf("----\n%zu criteria, %s, %.1fs total\n", results.size(),
                all ? "all passed" : "FAILURES PRESENT", total);
    return all ? 0 : 1;
}
