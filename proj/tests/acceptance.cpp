// Acceptance runner: executes the numbered criteria and prints one status
// line per criterion. With arguments, runs only the listed criteria.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "jointkit/suites.hpp"

int main(int argc, char** argv) {
    std::vector<int> which;
    for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
    if (which.empty())
        for (int i = 1; i <= jointkit::kCriterionCount; ++i) which.push_back(i);

    const char* env = std::getenv("JOINTKIT_REPORT_DIR");
    std::string outdir = env ? env : ".";

    bool all_ok = true;
    for (int n : which) {
        jointkit::SuiteResult res;
        try {
            res = jointkit::run_criterion(n, outdir);
        } catch (const std::exception& e) {
            res.name = "criterion " + std::to_string(n);
            res.fail(std::string("exception: ") + e.what());
        }
        std::cout << (res.passed ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << res.name
                  << " (" << res.cases << " cases";
        if (res.failures) std::cout << ", " << res.failures << " failures";
        std::cout << ")\n";
        for (const std::string& note : res.notes) std::cout << "       " << note << "\n";
        if (!res.passed) all_ok = false;
    }
    return all_ok ? 0 : 1;
}
