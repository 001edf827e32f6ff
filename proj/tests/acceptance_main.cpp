// Runs the thirteen acceptance checks and prints one line per criterion.
#include <cstdio>

#include "freebell/checks.hpp"

int main() {
    const auto results = freebell::checks::run_suite("all");
    bool all_pass = true;
    for (const auto& r : results) {
        std::printf("%-24s %s   %s\n", r.name.c_str(), r.pass ? "PASS" : "FAIL",
                    r.detail.c_str());
        std::fflush(stdout);
        all_pass = all_pass && r.pass;
    }
    std::printf("%s\n", all_pass ? "ACCEPTANCE: ALL 13 CRITERIA PASS"
                                 : "ACCEPTANCE: FAILURES PRESENT");
    return all_pass ? 0 : 1;
}
